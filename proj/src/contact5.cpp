#include "steinx/contact5.hpp"

#include "steinx/chern.hpp"
#include "steinx/error.hpp"

namespace steinx {

std::string diffeo_type_name(DiffeoType t) {
    return t == DiffeoType::TrivialBundleSum ? "trivial_bundle_sum" : "twisted_bundle_sum";
}

DiffeoType diffeo_type_for(long long r) {
    return r % 2 == 0 ? DiffeoType::TrivialBundleSum : DiffeoType::TwistedBundleSum;
}

ContactFiveClass classify(const SteinHandlebody& x) {
    require_valid(x);
    if (x.one_handles != 0)
        throw Error("classify requires a page without 1-handles; reduce them first");
    ContactFiveClass c;
    c.n = x.handles.size(); // b2 = handle count when there are no 1-handles
    c.r = rotation_divisor(x);
    c.diffeo_type = diffeo_type_for(c.r);
    return c;
}

bool contactomorphic(const ContactFiveClass& a, const ContactFiveClass& b) {
    return a.n == b.n && a.r == b.r;
}

bool diffeomorphic_total_spaces(const ContactFiveClass& a, const ContactFiveClass& b) {
    return a.n == b.n && (a.r - b.r) % 2 == 0;
}

} // namespace steinx

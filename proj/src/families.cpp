#include "steinx/families.hpp"

#include <string>

#include "steinx/error.hpp"

namespace steinx {

SteinHandlebody build_xp(long long p) {
    if (p < 0) throw Error("build_xp requires p >= 0");
    SteinHandlebody x;
    x.one_handles = 0;
    x.handles.push_back({1, 0, {}, std::nullopt});
    x.handles.push_back({p + 1, p, {}, std::nullopt});
    x.linking = IntegerMatrix::from_rows(std::vector<std::vector<long long>>{{0, 1}, {1, p}});
    x.comment = "abstract invariant record; off-diagonal linking is a modeling choice "
                "realizing the rank-2 unimodular indefinite form";
    return x;
}

SteinHandlebody build_y(std::size_t k) {
    SteinHandlebody y;
    y.one_handles = 0;
    for (std::size_t i = 0; i < k; ++i) y.handles.push_back({-1, 0, {}, std::nullopt});
    y.linking = IntegerMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i) y.linking.at(i, i) = -2;
    return y;
}

SteinHandlebody build_znp(std::size_t n, long long p) {
    if (n < 2) throw Error("build_znp requires n >= 2");
    return boundary_connected_sum(build_xp(p), build_y(n - 2));
}

std::vector<SteinHandlebody> build_torus_family(const std::vector<long long>& rs, std::size_t k) {
    if (rs.empty()) throw Error("build_torus_family needs a nonempty rotation list");
    if (k < 1) throw Error("build_torus_family requires k >= 1");
    for (long long r : rs) {
        if (r < 0) throw Error("build_torus_family requires nonnegative rotation numbers");
        if ((r - rs[0]) % 2 != 0)
            throw Error("build_torus_family: mixed parity in rotation numbers");
    }
    const long long tb = rs[0] + 1; // framing rs[0], shared by every member
    std::vector<SteinHandlebody> family;
    family.reserve(rs.size());
    for (long long r : rs) {
        SteinHandlebody knot;
        knot.one_handles = 0;
        knot.handles.push_back({tb, r, {}, std::nullopt});
        knot.linking = IntegerMatrix::from_rows(std::vector<std::vector<long long>>{{tb - 1}});
        knot.comment = "knot handle with fixed framing " + std::to_string(tb - 1);
        family.push_back(boundary_connected_sum(knot, build_y(k - 1)));
    }
    return family;
}

} // namespace steinx

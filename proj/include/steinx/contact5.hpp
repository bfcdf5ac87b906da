#pragma once

#include <cstddef>
#include <string>

#include "steinx/handlebody.hpp"

namespace steinx {

// #_n S^2 x S^3 for even rotation divisor, #_n S^2 x~ S^3 for odd.
enum class DiffeoType { TrivialBundleSum, TwistedBundleSum };

std::string diffeo_type_name(DiffeoType t);
DiffeoType diffeo_type_for(long long r);

// Complete invariant of a closed contact 5-manifold supported by an
// identity-monodromy open book whose page has no 1-handles: the page's b2
// and rotation divisor.
struct ContactFiveClass {
    std::size_t n = 0;
    long long r = 0; // nonnegative
    DiffeoType diffeo_type = DiffeoType::TrivialBundleSum;

    bool operator==(const ContactFiveClass&) const = default;
};

// Throws when 1-handles are present; reduce them first (acmoves) or abort.
ContactFiveClass classify(const SteinHandlebody& x);

bool contactomorphic(const ContactFiveClass& a, const ContactFiveClass& b);

// Total spaces are diffeomorphic iff the b2's agree and the rotation
// divisors share parity.
bool diffeomorphic_total_spaces(const ContactFiveClass& a, const ContactFiveClass& b);

} // namespace steinx

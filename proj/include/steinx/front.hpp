#pragma once

#include <string>
#include <vector>

namespace steinx {

// Combinatorial front data of a Legendrian knot: crossing signs and cusp
// counts. This is declared data, not a planar embedding; the module computes
// the classical invariants of what it is handed and does not attempt
// realizability checks.
struct FrontDiagram {
    std::vector<int> crossings; // +1 / -1
    long long up_cusps = 0;
    long long down_cusps = 0;

    bool operator==(const FrontDiagram&) const = default;
};

// Invariant violations, empty when the data is a plausible knot front:
// counts nonnegative, crossing signs in {+1,-1}, total cusp count even
// and at least 2.
std::vector<std::string> validate(const FrontDiagram& f);

long long writhe(const FrontDiagram& f);

// writhe - (up + down)/2. Throws on an odd cusp total.
long long thurston_bennequin(const FrontDiagram& f);

// (down - up)/2. Throws on an odd cusp total.
long long rotation_number(const FrontDiagram& f);

// tb + rot must be odd for a Legendrian knot; throws on violation.
void validate_knot_parity(long long tb, long long rot);

} // namespace steinx

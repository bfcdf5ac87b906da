#pragma once

#include <compare>
#include <vector>

#include "steinx/handlebody.hpp"

namespace steinx {

struct TorsionCoordinate {
    Int residue; // reduced into [0, order)
    Int order;   // > 1
    bool operator==(const TorsionCoordinate&) const = default;
};

// Element of H^2(X; Z) in the coordinates determined by the deterministic
// Smith basis of the boundary map: free coordinates are evaluations on the
// saturated kernel basis of d2 (the basis dual to it in H^2/Tor), torsion
// coordinates are residues modulo the Smith orders.
struct CohomologyClass {
    std::vector<Int> free_coords;
    std::vector<TorsionCoordinate> torsion_coords;

    bool operator==(const CohomologyClass&) const = default;
    bool operator<(const CohomologyClass& other) const; // canonical order for dedup
};

// The first Chern cochain: the rotation number of each 2-handle, i.e. the
// value of c1 on that handle's cochain generator.
std::vector<long long> c1_cochain(const SteinHandlebody& x);

// The class of the c1 cochain in H^2.
CohomologyClass c1_class(const SteinHandlebody& x);

// gcd of the free coordinates of c1_class; 0 when the free part is empty or
// zero (the torsion convention).
Int c1_divisibility(const SteinHandlebody& x);

// gcd of the rotation numbers; defined only without 1-handles (throws
// otherwise). 0 when b2 = 0 or all rotation numbers vanish.
long long rotation_divisor(const SteinHandlebody& x);

} // namespace steinx

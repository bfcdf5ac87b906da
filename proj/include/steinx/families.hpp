#pragma once

#include <cstddef>
#include <vector>

#include "steinx/handlebody.hpp"

namespace steinx {

// Generators for the example families, emitted as abstract invariant
// records: handle counts, (tb, rot) data and a linking realization of the
// intersection form. No front diagrams are produced.

// Two 2-handles with rotation numbers (0, p) and no 1-handles. The linking
// matrix [[0, 1], [1, p]] is unimodular and indefinite, with diagonal
// parities matching the framing rule tb - 1 (tb = 1 and tb = p + 1); for
// even p it is congruent to the hyperbolic form. The off-diagonal pattern
// is a modeling choice recorded on the emitted record.
SteinHandlebody build_xp(long long p);

// k disk bundles: tb = -1, rot = 0 unknot handles, linking diag(-2, ..., -2).
SteinHandlebody build_y(std::size_t k);

// build_xp(p) boundary-connected-summed with build_y(n - 2); b2 = n and
// rotation divisor p. Requires n >= 2.
SteinHandlebody build_znp(std::size_t n, long long p);

// One knot handle with tb = rs[0] + 1 and rot = rs[i] (framing rs[0],
// independent of i) plus k - 1 rot-0 unknot handles. All rs must share
// parity; the records differ only in rot and pass mutual
// diffeomorphism-evidence checks.
std::vector<SteinHandlebody> build_torus_family(const std::vector<long long>& rs,
                                                std::size_t k = 1);

} // namespace steinx

#pragma once

#include <vector>

#include "steinx/chern.hpp"
#include "steinx/genus.hpp"

namespace steinx {

// All cohomology classes a Stein structure's first Chern class could be,
// given declared genus bounds for the kernel-basis classes: free coordinate
// i ranges over |c_i| <= 2 g_i - 2 - [v_i].[v_i], torsion coordinates over
// the residues modulo their Smith orders. Sorted canonically, no duplicates.
// With extra_filter, oracle entries beyond the basis classes prune the list
// through the same inequality.
//
// Throws when the oracle misses a basis class, or when some declared bound
// is incompatible with the adjunction inequality (negative coordinate range).
std::vector<CohomologyClass> enumerate_c1_candidates(const SteinHandlebody& x,
                                                     const GenusOracle& oracle,
                                                     bool extra_filter = false);

// Size of the candidate list: an upper bound for the number of first Chern
// classes of Stein structures on the underlying smooth manifold.
std::size_t nc_upper_bound(const SteinHandlebody& x, const GenusOracle& oracle,
                           bool extra_filter = false);

// Number of distinct c1 classes among records asserted (and evidence-checked:
// equal b2, equal form properties, equal H1 data) to present the same smooth
// 4-manifold. Throws when the evidence checks disagree.
std::size_t nc_lower_bound(const std::vector<SteinHandlebody>& records);

} // namespace steinx

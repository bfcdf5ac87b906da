#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinx/front.hpp"
#include "steinx/intlinalg.hpp"

namespace steinx {

// A 2-handle attached along a Legendrian knot. The smooth framing is always
// tb - 1 and is derived, never stored. The attaching word lists the signed
// 1-handle indices (1-based) traversed by the attaching circle; it is empty
// when no 1-handles are traversed. An optional front certifies (tb, rot).
struct TwoHandle {
    long long tb = 0;
    long long rot = 0;
    std::vector<long long> word;
    std::optional<FrontDiagram> front;

    bool operator==(const TwoHandle&) const = default;
};

// Combinatorial model of a Stein handlebody: one 0-handle (implicit),
// `one_handles` 1-handles, and 2-handles with symmetric linking data whose
// diagonal carries the framings tb_i - 1. Off-diagonal linking numbers are
// user-supplied data; the model does not derive them from diagrams.
struct SteinHandlebody {
    long long one_handles = 0;
    std::vector<TwoHandle> handles;
    IntegerMatrix linking;
    std::string comment; // free-form note, carried through serialization

    bool operator==(const SteinHandlebody&) const = default;
};

// Presentation of the fundamental group read off the handle structure:
// 1-handles give generators, attaching words give relators. Words are lists
// of signed generator indices, 1-based.
struct GroupPresentation {
    long long generators = 0;
    std::vector<std::vector<long long>> relators;

    bool operator==(const GroupPresentation&) const = default;
};

// Cancels adjacent g g^{-1} pairs until stable.
std::vector<long long> free_reduce(std::vector<long long> word);

// Freely reduces relators and validates index ranges.
GroupPresentation make_presentation(long long generators,
                                    std::vector<std::vector<long long>> relators);

// Every type-invariant violation, never aborting on the first.
std::vector<std::string> validate(const SteinHandlebody& x);
void require_valid(const SteinHandlebody& x); // throws with the full list

// The linking matrix, which represents the intersection form when there are
// no 1-handles. Throws if 1-handles are present; use
// homology_intersection_matrix for the general case.
IntegerMatrix intersection_matrix(const SteinHandlebody& x);

// Boundary map C2 -> C1 of the handle chain complex: rows are 1-handles,
// columns are 2-handles, entries are abelianized word exponents.
IntegerMatrix chain_boundary(const SteinHandlebody& x);

struct Homology {
    std::size_t b2 = 0;           // rank of ker d2 (H2 is free)
    std::size_t h1_free_rank = 0; // free rank of coker d2
    std::vector<Int> torsion_orders; // Smith diagonal entries of d2 that are > 1
};

Homology homology(const SteinHandlebody& x);

// Saturated basis of H2 = ker d2 inside C2 coordinates (one column per class);
// the deterministic basis every downstream coordinate computation uses.
IntegerMatrix homology_kernel_basis(const SteinHandlebody& x);

// Intersection pairing restricted to the kernel basis: K^T L K. Equals the
// linking matrix when there are no 1-handles.
IntegerMatrix homology_intersection_matrix(const SteinHandlebody& x);

GroupPresentation presentation(const SteinHandlebody& x);

// Disjoint handle union: 1-handle counts add, handle lists concatenate with
// b's word indices shifted, linking becomes the block diagonal sum.
SteinHandlebody boundary_connected_sum(const SteinHandlebody& a, const SteinHandlebody& b);

} // namespace steinx

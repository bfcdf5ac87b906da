#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "steinx/handlebody.hpp"

namespace steinx {

// Andrews-Curtis moves. Indices refer to relators of the canonical parent
// state. Swap is part of the move set but is absorbed by the sorted
// canonical form, so the search never emits it; conjugation survives
// canonicalization exactly when it rotates a cyclically reduced relator.
struct AcMove {
    enum class Kind { Invert, Multiply, Conjugate, Swap, Stabilize, Destabilize };
    Kind kind = Kind::Invert;
    std::size_t relator = 0;   // target relator
    std::size_t other = 0;     // Multiply / Swap: the second relator
    bool invert_other = false; // Multiply: use the inverse of `other`
    long long generator = 0;   // Conjugate: signed g, r -> g r g^{-1}

    bool operator==(const AcMove&) const = default;
};

std::string move_name(AcMove::Kind k);

// Raw move application, no canonicalization. Throws on out-of-range indices
// or an ineligible destabilization.
GroupPresentation apply_move(const GroupPresentation& p, const AcMove& m);

// Relators freely and cyclically reduced, sorted lexicographically,
// generators renumbered by first occurrence. A completeness-preserving
// quotient of the move graph up to the moves as implemented on canonical
// states.
GroupPresentation canonicalize(const GroupPresentation& p);

// Canonicalizes the input, then applies each move followed by
// canonicalization. Traces returned by ac_reduce replay under exactly these
// semantics.
GroupPresentation replay_trace(const GroupPresentation& p, const std::vector<AcMove>& trace);

struct AcResult {
    GroupPresentation presentation; // zero-generator state, or the best state found
    std::vector<AcMove> trace;      // replays from the input to `presentation`
    bool trivialized = false;
    std::optional<std::string> obstruction; // set when the abelianization blocks the search
    std::size_t states_explored = 0;
};

// A nontrivial abelianization of the presented group rules out any
// reduction to zero generators; returns its description, or nullopt.
std::optional<std::string> trivializability_obstruction(const GroupPresentation& p);

// Breadth-first search for a zero-generator presentation. Returns the first
// goal at the shallowest depth (ties broken by minimal complexity, then by
// canonical encoding); otherwise the minimal-complexity state seen, flagged
// exhausted. Complexity is (generator count, total relator length).
AcResult ac_reduce(const GroupPresentation& p, std::size_t max_depth, std::size_t max_states);

struct ReduceOutcome {
    std::optional<SteinHandlebody> reduced; // present iff the search trivialized
    AcResult search;
};

// Eliminates 1-handles via Andrews-Curtis moves on the handle presentation.
// A 2-handle whose relator slot cancels against a generator is removed with
// it; surviving handles keep their (tb, rot) data and mutual linking, with
// attaching words cleared.
ReduceOutcome reduce_handlebody(const SteinHandlebody& x, std::size_t max_depth,
                                std::size_t max_states);

} // namespace steinx

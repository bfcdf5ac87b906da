#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steinx/contact5.hpp"
#include "steinx/genus.hpp"

namespace steinx {

struct FamilyMember {
    std::string id;
    SteinHandlebody handlebody;
};

struct ExoticaMember {
    std::string id;
    Int divisibility;
    std::optional<ContactFiveClass> contact_class;
    std::optional<Int> q_genus_lower;
};

enum class ExoticaVerdict { InfiniteExoticSubfamily, Inconclusive };

std::string verdict_name(ExoticaVerdict v);

// Per-family distinction report. The witness lists member ids whose
// guaranteed genus lower bounds strictly increase; it is nonempty exactly
// when the verdict is infinite_exotic_subfamily.
struct ExoticaReport {
    std::vector<ExoticaMember> members; // processed members, sorted by divisibility
    ExoticaVerdict verdict = ExoticaVerdict::Inconclusive;
    std::vector<std::string> witness;
    std::vector<std::string> notes;
    std::vector<std::string> explanations; // per-member inequality chains
};

// Divisibility route: pairwise distinct Chern divisibilities force an
// infinite pairwise non-diffeomorphic subfamily; the witness is the longest
// strictly increasing subsequence of genus lower bounds after sorting by
// divisibility. Members failing the necessary form checks against q are
// excluded with a note.
ExoticaReport detect_by_divisibility(const std::vector<FamilyMember>& family,
                                     const IntegerMatrix& q);

struct AcBudget {
    std::size_t max_depth = 16;
    std::size_t max_states = 100000;
};

// Contact route: classify every member (reducing 1-handles within the given
// budget when needed); pairwise distinct contact classes (n, r) yield
// pairwise distinct divisibilities, delegating to the divisibility route.
// q defaults to the intersection form of the first member.
ExoticaReport detect_by_contact(const std::vector<FamilyMember>& family,
                                const std::optional<IntegerMatrix>& q = std::nullopt,
                                const AcBudget& budget = {});

// A Q-genus separation certificate: an upper bound for a (from declared
// surface data over an exhaustive basis search) strictly below the lower
// bound for b proves a and b are not orientation-preserving diffeomorphic.
struct Certificate {
    long long upper_a = 0;
    Int lower_b;
    IntegerMatrix matrix;
    std::vector<std::string> explanation;
};

// Returns a certificate when q_genus upper(a) < q_genus lower(b), nullopt
// when the bounds do not separate. Throws if the oracle contradicts a's own
// adjunction lower bound (unsound declared data) or preconditions fail.
std::optional<Certificate> certify_nondiffeomorphic(const SteinHandlebody& a,
                                                    const SteinHandlebody& b,
                                                    const IntegerMatrix& q,
                                                    const GenusOracle& oracle_a,
                                                    long long coeff_bound = 2);

} // namespace steinx

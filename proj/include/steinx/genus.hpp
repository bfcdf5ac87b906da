#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinx/handlebody.hpp"

namespace steinx {

// User-declared embedded-surface data: known genus upper bounds for H2
// classes, keyed by coordinate vectors in the deterministic kernel basis.
// Bounds are declared only for nonzero classes.
struct GenusOracle {
    std::map<std::vector<Int>, long long> entries;

    std::optional<long long> lookup(const std::vector<Int>& cls) const;
    std::vector<std::string> validate() const;
};

// Lower/upper estimates for the intersection genus of a handlebody with
// respect to a fixed matrix presentation of its form.
struct QGenusBound {
    Int lower = 0;
    std::optional<long long> upper;
    std::optional<std::vector<Int>> witness_class;
    IntegerMatrix matrix;
    std::vector<std::string> checks_run;
};

// Which necessary conditions for "q presents the intersection form of x"
// were checked, and which failed. Rank, determinant, signature and parity
// are necessary, not sufficient; the rest is the caller's assertion.
struct CompatibilityReport {
    std::vector<std::string> checks_run;
    std::vector<std::string> failures;
};

CompatibilityReport form_compatibility(const SteinHandlebody& x, const IntegerMatrix& q);

// Least genus g with |c1_pairing| + self_int <= 2g - 2, clamped at 0.
// Callers apply this to nonzero classes only.
Int adjunction_genus_lb(const Int& c1_pairing, const Int& self_int);

// Adjunction bound for a single nonzero class given in kernel-basis
// coordinates.
Int class_genus_lb(const SteinHandlebody& x, const std::vector<Int>& alpha);

// Lower bound for the intersection genus with respect to q:
// max(0, ceil((d + m_min + 2)/2), ceil((m_max + 2)/2)) with d the Chern
// divisibility and m_min/m_max the extreme diagonal entries of q. The
// second term applies the adjunction inequality to a basis vector of
// maximal self-intersection with the pairing term dropped.
QGenusBound q_genus_lb(const SteinHandlebody& x, const IntegerMatrix& q);

// Max of the oracle bounds over an explicit basis whose Gram matrix is
// exactly q; an upper bound by the min-over-bases definition.
long long q_genus_ub(const SteinHandlebody& x, const IntegerMatrix& q, const GenusOracle& oracle,
                     const std::vector<std::vector<Int>>& basis);

// Exhaustive basis enumeration with coordinates in [-coeff_bound, coeff_bound];
// guards: b2 <= 4 and coeff_bound <= 6. Bases not fully covered by the
// oracle are skipped; upper stays absent when no covered basis realizes q.
QGenusBound q_genus_search(const SteinHandlebody& x, const IntegerMatrix& q,
                           const GenusOracle& oracle, long long coeff_bound);

} // namespace steinx

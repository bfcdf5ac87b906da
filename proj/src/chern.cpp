#include "steinx/chern.hpp"

#include <numeric>

#include "steinx/error.hpp"

namespace steinx {

bool CohomologyClass::operator<(const CohomologyClass& other) const {
    if (free_coords != other.free_coords) return free_coords < other.free_coords;
    for (std::size_t i = 0; i < torsion_coords.size() && i < other.torsion_coords.size(); ++i) {
        if (torsion_coords[i].order != other.torsion_coords[i].order)
            return torsion_coords[i].order < other.torsion_coords[i].order;
        if (torsion_coords[i].residue != other.torsion_coords[i].residue)
            return torsion_coords[i].residue < other.torsion_coords[i].residue;
    }
    return torsion_coords.size() < other.torsion_coords.size();
}

std::vector<long long> c1_cochain(const SteinHandlebody& x) {
    std::vector<long long> rots;
    rots.reserve(x.handles.size());
    for (const TwoHandle& h : x.handles) rots.push_back(h.rot);
    return rots;
}

CohomologyClass c1_class(const SteinHandlebody& x) {
    require_valid(x);
    const IntegerMatrix d2 = chain_boundary(x);
    SnfFactors f = smith_normal_form_factors(d2);
    const std::size_t n = d2.cols();

    // With d2 = u d v, the basis w_j = (col j of v_inv) of C2 satisfies
    // d2 w_j = d_j (col j of u). The coefficient of c1 on the dual class
    // [w_j^*] is the evaluation <c1, w_j> = rot . w_j. Indices with d_j = 0
    // are the free (kernel) coordinates; indices with d_j > 1 are torsion of
    // that order; d_j = 1 contributes nothing to H^2.
    const std::vector<long long> rots = c1_cochain(x);
    CohomologyClass c;
    for (std::size_t j = 0; j < n; ++j) {
        Int coeff = 0;
        for (std::size_t i = 0; i < n; ++i) coeff += int_from_i64(rots[i]) * f.v_inv.at(i, j);
        if (j < f.rank) {
            const Int order = f.snf.d.at(j, j);
            if (order > 1) c.torsion_coords.push_back({mod_nonneg(coeff, order), order});
        } else {
            c.free_coords.push_back(coeff);
        }
    }
    return c;
}

Int c1_divisibility(const SteinHandlebody& x) {
    return gcd_vector(c1_class(x).free_coords);
}

long long rotation_divisor(const SteinHandlebody& x) {
    if (x.one_handles != 0)
        throw Error("rotation_divisor is defined only for handlebodies without 1-handles");
    long long g = 0;
    for (const TwoHandle& h : x.handles) g = std::gcd(g, h.rot);
    return g;
}

} // namespace steinx

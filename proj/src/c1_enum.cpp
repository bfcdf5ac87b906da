#include "steinx/c1_enum.hpp"

#include <algorithm>
#include <set>

#include "steinx/error.hpp"

namespace steinx {

std::vector<CohomologyClass> enumerate_c1_candidates(const SteinHandlebody& x,
                                                     const GenusOracle& oracle,
                                                     bool extra_filter) {
    require_valid(x);
    const IntegerMatrix d2 = chain_boundary(x);
    SnfFactors f = smith_normal_form_factors(d2);
    const std::size_t m = d2.cols() - f.rank; // b2
    const IntegerMatrix form = homology_intersection_matrix(x);

    // Free coordinate ranges from the adjunction inequality on the basis
    // classes (unit coordinate vectors). A first Chern class is
    // characteristic, so c_i additionally matches the parity of the basis
    // self-intersection; the tb + rot invariant guarantees the record's own
    // class always survives this restriction.
    std::vector<Int> free_bound(m), free_parity(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Int> unit(m, Int(0));
        unit[i] = 1;
        std::optional<long long> g = oracle.lookup(unit);
        if (!g)
            throw Error("oracle is missing an entry for kernel-basis class " + std::to_string(i));
        free_bound[i] = Int(2) * int_from_i64(*g) - 2 - form.at(i, i);
        if (free_bound[i] < 0)
            throw Error("oracle bound for basis class " + std::to_string(i) +
                        " is inconsistent with the adjunction inequality "
                        "(2g - 2 - self-intersection < 0)");
        free_parity[i] = mod_nonneg(form.at(i, i), Int(2));
    }

    std::vector<Int> torsion_orders;
    for (const Int& e : f.snf.d.diagonal_entries())
        if (e > 1) torsion_orders.push_back(e);

    // Non-basis oracle entries optionally prune: any candidate c must obey
    // |<c, a>| + a.a <= 2g - 2 for every declared class a.
    std::vector<std::pair<std::vector<Int>, Int>> filters;
    if (extra_filter) {
        for (const auto& [cls, g] : oracle.entries) {
            if (cls.size() != m) continue;
            bool unit = false;
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<Int> e(m, Int(0));
                e[i] = 1;
                if (cls == e) unit = true;
            }
            if (unit) continue;
            Int self = 0;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) self += cls[i] * form.at(i, j) * cls[j];
            filters.emplace_back(cls, Int(2) * int_from_i64(g) - 2 - self);
        }
    }

    std::vector<CohomologyClass> out;
    std::vector<Int> free_coords(m);
    std::vector<Int> residues(torsion_orders.size());

    auto emit_torsion = [&](auto&& self, std::size_t k) -> void {
        if (k == torsion_orders.size()) {
            CohomologyClass c;
            c.free_coords = free_coords;
            for (std::size_t t = 0; t < torsion_orders.size(); ++t)
                c.torsion_coords.push_back({residues[t], torsion_orders[t]});
            out.push_back(std::move(c));
            return;
        }
        for (Int r = 0; r < torsion_orders[k]; ++r) {
            residues[k] = r;
            self(self, k + 1);
        }
    };

    auto emit_free = [&](auto&& self, std::size_t k) -> void {
        if (k == m) {
            for (const auto& [cls, bound] : filters) {
                Int pairing = 0;
                for (std::size_t i = 0; i < m; ++i) pairing += free_coords[i] * cls[i];
                if (int_abs(pairing) > bound) return;
            }
            emit_torsion(emit_torsion, 0);
            return;
        }
        for (Int c = -free_bound[k]; c <= free_bound[k]; ++c) {
            if (mod_nonneg(c, Int(2)) != free_parity[k]) continue;
            free_coords[k] = c;
            self(self, k + 1);
        }
    };

    emit_free(emit_free, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t nc_upper_bound(const SteinHandlebody& x, const GenusOracle& oracle,
                           bool extra_filter) {
    return enumerate_c1_candidates(x, oracle, extra_filter).size();
}

std::size_t nc_lower_bound(const std::vector<SteinHandlebody>& records) {
    if (records.empty()) return 0;
    for (const SteinHandlebody& r : records) require_valid(r);

    // Diffeomorphism-evidence checks: the records must plausibly present one
    // smooth manifold before counting Chern classes against each other.
    const Homology h0 = homology(records[0]);
    const FormProperties p0 = form_properties(homology_intersection_matrix(records[0]));
    const Int det0 = determinant(homology_intersection_matrix(records[0]));
    for (std::size_t i = 1; i < records.size(); ++i) {
        const Homology hi = homology(records[i]);
        if (hi.b2 != h0.b2 || hi.h1_free_rank != h0.h1_free_rank ||
            hi.torsion_orders != h0.torsion_orders)
            throw Error("records plausibly present different manifolds: homology mismatch at record " +
                        std::to_string(i));
        const IntegerMatrix fi = homology_intersection_matrix(records[i]);
        if (!(form_properties(fi) == p0) || determinant(fi) != det0)
            throw Error("records plausibly present different manifolds: form mismatch at record " +
                        std::to_string(i));
    }

    std::set<CohomologyClass> classes;
    for (const SteinHandlebody& r : records) classes.insert(c1_class(r));
    return classes.size();
}

} // namespace steinx

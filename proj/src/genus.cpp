#include "steinx/genus.hpp"

#include <algorithm>

#include "steinx/chern.hpp"
#include "steinx/error.hpp"

namespace steinx {

std::optional<long long> GenusOracle::lookup(const std::vector<Int>& cls) const {
    auto it = entries.find(cls);
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> GenusOracle::validate() const {
    std::vector<std::string> v;
    for (const auto& [cls, g] : entries) {
        bool zero = true;
        for (const Int& c : cls)
            if (c != 0) zero = false;
        if (zero) v.push_back("oracle declares a bound for the zero class");
        if (g < 0) v.push_back("oracle bound must be nonnegative");
    }
    return v;
}

CompatibilityReport form_compatibility(const SteinHandlebody& x, const IntegerMatrix& q) {
    CompatibilityReport rep;
    rep.checks_run.push_back("symmetry");
    if (!q.is_square() || !q.is_symmetric()) {
        rep.failures.push_back("q is not symmetric");
        return rep;
    }
    const IntegerMatrix f = homology_intersection_matrix(x);
    rep.checks_run.push_back("rank");
    if (q.rows() != f.rows()) {
        rep.failures.push_back("q has rank " + std::to_string(q.rows()) + ", the form has rank " +
                               std::to_string(f.rows()));
        return rep;
    }
    rep.checks_run.push_back("determinant");
    if (determinant(q) != determinant(f))
        rep.failures.push_back("determinant mismatch (congruent matrices share it exactly)");
    const FormProperties pq = form_properties(q);
    const FormProperties pf = form_properties(f);
    rep.checks_run.push_back("signature");
    if (!(pq.signature == pf.signature)) rep.failures.push_back("signature mismatch");
    rep.checks_run.push_back("parity");
    if (pq.even != pf.even) rep.failures.push_back("parity (even/odd) mismatch");
    return rep;
}

static CompatibilityReport require_compatible(const SteinHandlebody& x, const IntegerMatrix& q) {
    CompatibilityReport rep = form_compatibility(x, q);
    if (rep.failures.empty()) return rep;
    std::string msg = "q cannot be an intersection matrix of x:";
    for (const std::string& s : rep.failures) msg += " [" + s + "]";
    throw Error(msg);
}

Int adjunction_genus_lb(const Int& c1_pairing, const Int& self_int) {
    Int g = ceil_div(int_abs(c1_pairing) + self_int + 2, Int(2));
    return g > 0 ? g : Int(0);
}

Int class_genus_lb(const SteinHandlebody& x, const std::vector<Int>& alpha) {
    require_valid(x);
    const CohomologyClass c = c1_class(x);
    if (alpha.size() != c.free_coords.size())
        throw Error("class coordinates have length " + std::to_string(alpha.size()) +
                    ", expected b2 = " + std::to_string(c.free_coords.size()));
    bool zero = true;
    for (const Int& a : alpha)
        if (a != 0) zero = false;
    if (zero) throw Error("the adjunction inequality applies to nonzero classes only");

    Int pairing = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) pairing += c.free_coords[i] * alpha[i];
    const IntegerMatrix f = homology_intersection_matrix(x);
    Int self = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < alpha.size(); ++j) self += alpha[i] * f.at(i, j) * alpha[j];
    return adjunction_genus_lb(pairing, self);
}

QGenusBound q_genus_lb(const SteinHandlebody& x, const IntegerMatrix& q) {
    require_valid(x);
    if (homology(x).b2 < 1) throw Error("q_genus_lb requires b2 >= 1");

    QGenusBound out;
    out.matrix = q;
    out.checks_run = require_compatible(x, q).checks_run;

    const Int d = c1_divisibility(x);
    const std::vector<Int> diag = q.diagonal_entries();
    Int m_min = diag[0], m_max = diag[0];
    for (const Int& m : diag) {
        if (m < m_min) m_min = m;
        if (m > m_max) m_max = m;
    }
    // Some basis vector pairs with c1 to at least d in absolute value, and
    // every basis vector is nonzero, so both adjunction estimates apply.
    Int t = adjunction_genus_lb(d, m_min);
    Int t2 = adjunction_genus_lb(Int(0), m_max);
    out.lower = t > t2 ? t : t2;
    return out;
}

long long q_genus_ub(const SteinHandlebody& x, const IntegerMatrix& q, const GenusOracle& oracle,
                     const std::vector<std::vector<Int>>& basis) {
    require_valid(x);
    const IntegerMatrix f = homology_intersection_matrix(x);
    const std::size_t n = f.rows();
    if (basis.size() != n) throw Error("basis must contain exactly b2 classes");
    for (const auto& v : basis)
        if (v.size() != n) throw Error("basis class has wrong coordinate length");
    if (q.rows() != n || q.cols() != n) throw Error("basis matrix != q (shape)");

    IntegerMatrix coords(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) coords.at(i, j) = basis[j][i];
    IntegerMatrix gram = coords.transpose() * f * coords;
    if (!(gram == q)) throw Error("basis matrix != q");
    if (int_abs(determinant(coords)) != 1)
        throw Error("the supplied classes do not form a basis of H2");

    long long best = 0;
    for (const auto& v : basis) {
        std::optional<long long> g = oracle.lookup(v);
        if (!g) throw Error("oracle is missing an entry for a basis class");
        best = std::max(best, *g);
    }
    return best;
}

namespace {

struct BasisSearch {
    const IntegerMatrix& f; // the handlebody's own form
    const IntegerMatrix& q; // target Gram matrix
    const GenusOracle& oracle;
    std::size_t n;

    std::vector<std::vector<Int>> candidates = {};
    std::vector<Int> candidate_square = {};

    std::optional<long long> best_ub = {};
    std::vector<std::vector<Int>> best_basis = {};
    unsigned long long nodes = 0;
    static constexpr unsigned long long kNodeBudget = 2'000'000;

    std::vector<std::size_t> chosen = {};

    Int pairing(std::size_t a, std::size_t b) const {
        const std::vector<Int>& va = candidates[a];
        const std::vector<Int>& vb = candidates[b];
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += va[i] * f.at(i, j) * vb[j];
        return s;
    }

    void dfs(std::size_t k) {
        if (k == n) {
            IntegerMatrix coords(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) coords.at(i, j) = candidates[chosen[j]][i];
            if (int_abs(determinant(coords)) != 1) return;
            long long ub = 0;
            for (std::size_t j = 0; j < n; ++j) {
                std::optional<long long> g = oracle.lookup(candidates[chosen[j]]);
                if (!g) return; // basis not covered by the oracle: skip it
                ub = std::max(ub, *g);
            }
            if (!best_ub || ub < *best_ub) {
                best_ub = ub;
                best_basis.clear();
                for (std::size_t j = 0; j < n; ++j) best_basis.push_back(candidates[chosen[j]]);
            }
            return;
        }
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (++nodes > kNodeBudget)
                throw Error("basis enumeration budget exceeded; tighten coeff_bound");
            if (candidate_square[c] != q.at(k, k)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                if (pairing(chosen[j], c) != q.at(j, k)) ok = false;
            if (!ok) continue;
            chosen.push_back(c);
            dfs(k + 1);
            chosen.pop_back();
        }
    }
};

} // namespace

QGenusBound q_genus_search(const SteinHandlebody& x, const IntegerMatrix& q,
                           const GenusOracle& oracle, long long coeff_bound) {
    require_valid(x);
    const std::size_t n = homology(x).b2;
    if (n > 4) throw Error("q_genus_search guard: b2 <= 4");
    if (coeff_bound < 1 || coeff_bound > 6)
        throw Error("q_genus_search guard: 1 <= coeff_bound <= 6");
    if (oracle.entries.empty()) throw Error("q_genus_search needs a nonempty oracle");

    QGenusBound out = q_genus_lb(x, q);

    const IntegerMatrix f = homology_intersection_matrix(x);
    BasisSearch search{f, q, oracle, n};

    // Lexicographic enumeration of [-cb, cb]^n keeps the search order, and
    // hence the reported witness, deterministic.
    std::vector<long long> v(n, -coeff_bound);
    for (;;) {
        std::vector<Int> vec;
        vec.reserve(n);
        for (long long e : v) vec.push_back(int_from_i64(e));
        bool zero = std::all_of(vec.begin(), vec.end(), [](const Int& e) { return e == 0; });
        if (!zero) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) s += vec[i] * f.at(i, j) * vec[j];
            search.candidates.push_back(std::move(vec));
            search.candidate_square.push_back(std::move(s));
        }
        std::size_t pos = n;
        while (pos > 0 && v[pos - 1] == coeff_bound) v[--pos] = -coeff_bound;
        if (pos == 0) break;
        ++v[pos - 1];
    }

    search.dfs(0);
    if (search.best_ub) {
        out.upper = *search.best_ub;
        long long maxg = -1;
        for (const auto& cls : search.best_basis) {
            long long g = *oracle.lookup(cls);
            if (g > maxg) {
                maxg = g;
                out.witness_class = cls;
            }
        }
    }
    return out;
}

} // namespace steinx

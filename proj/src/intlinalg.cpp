#include "steinx/intlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace steinx {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Int>& d) {
    IntegerMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("ragged rows in matrix literal");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Int>> conv(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (long long e : rows[i]) conv[i].push_back(int_from_i64(e));
    return from_rows(conv);
}

bool IntegerMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product shape mismatch");
    IntegerMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw Error("matrix-vector shape mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

std::vector<Int> IntegerMatrix::diagonal_entries() const {
    const std::size_t k = std::min(rows_, cols_);
    std::vector<Int> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = at(i, i);
    return d;
}

std::vector<Int> IntegerMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                       const std::vector<std::size_t>& col_idx) const {
    IntegerMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntegerMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    os << "]";
    return os.str();
}

std::string definiteness_name(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "positive-definite";
        case Definiteness::NegativeDefinite: return "negative-definite";
        case Definiteness::Indefinite: return "indefinite";
        case Definiteness::Degenerate: return "degenerate";
    }
    return "?";
}

namespace {

// Workspace maintaining u * d * v = source throughout the reduction.
// Row operation E on d requires u <- u E^{-1} and u_inv <- E u_inv;
// column operation F on d requires v <- F^{-1} v and v_inv <- v_inv F.
struct SnfWork {
    IntegerMatrix d, u, u_inv, v, v_inv;

    explicit SnfWork(const IntegerMatrix& m)
        : d(m),
          u(IntegerMatrix::identity(m.rows())),
          u_inv(IntegerMatrix::identity(m.rows())),
          v(IntegerMatrix::identity(m.cols())),
          v_inv(IntegerMatrix::identity(m.cols())) {}

    void row_swap(std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        u_inv.swap_rows(i, j);
        u.swap_cols(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v_inv.swap_cols(i, j);
        v.swap_rows(i, j);
    }
    // row_i += f * row_j
    void row_add(std::size_t i, std::size_t j, const Int& f) {
        d.add_row_multiple(i, j, f);
        u_inv.add_row_multiple(i, j, f);
        u.add_col_multiple(j, i, -f);
    }
    // col_i += f * col_j
    void col_add(std::size_t i, std::size_t j, const Int& f) {
        d.add_col_multiple(i, j, f);
        v_inv.add_col_multiple(i, j, f);
        v.add_row_multiple(j, i, -f);
    }
    void col_negate(std::size_t j) {
        d.negate_col(j);
        v_inv.negate_col(j);
        v.negate_row(j);
    }
};

// Minimal-absolute-value nonzero entry of d[t.., t..]; ties by lowest
// (row, col) in row-major order. Returns false if the submatrix is zero.
bool find_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int a = int_abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SnfFactors smith_normal_form_factors(const IntegerMatrix& m) {
    SnfWork w(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t steps = std::min(rows, cols);
    std::size_t rank = 0;

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(w.d, t, pi, pj)) break; // remaining block is zero
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            // Euclidean reduction of the pivot cross.
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int q = w.d.at(i, t) / w.d.at(t, t); // C truncation keeps |remainder| < |pivot|
                if (q != 0) w.row_add(i, t, -q);
                if (w.d.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int q = w.d.at(t, j) / w.d.at(t, t);
                if (q != 0) w.col_add(j, t, -q);
                if (w.d.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // A nonzero remainder is strictly smaller than the pivot:
                // re-select and continue.
                find_pivot(w.d, t, pi, pj);
                w.row_swap(t, pi);
                w.col_swap(t, pj);
                continue;
            }
            // Cross is clear; enforce the divisor chain on the trailing block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.row_add(t, i, Int(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (w.d.at(t, t) < 0) w.col_negate(t);
        ++rank;
    }

    SnfFactors out;
    out.snf.u = std::move(w.u);
    out.snf.d = std::move(w.d);
    out.snf.v = std::move(w.v);
    out.snf.source = m;
    out.u_inv = std::move(w.u_inv);
    out.v_inv = std::move(w.v_inv);
    out.rank = rank;
    return out;
}

SnfDecomposition smith_normal_form(const IntegerMatrix& m) {
    return smith_normal_form_factors(m).snf;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
    SnfFactors f = smith_normal_form_factors(m);
    const std::size_t n = m.cols();
    IntegerMatrix k(n, n - f.rank);
    // m * v_inv e_j = u d e_j = d_j * (col j of u) = 0 exactly for j >= rank,
    // and v_inv is unimodular, so these columns are a saturated basis.
    for (std::size_t j = f.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k.at(i, j - f.rank) = f.v_inv.at(i, j);
    return k;
}

Int gcd_vector(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

Int gcd_vector(const std::vector<long long>& v) {
    std::vector<Int> conv;
    conv.reserve(v.size());
    for (long long e : v) conv.push_back(int_from_i64(e));
    return gcd_vector(conv);
}

Int determinant(const IntegerMatrix& m) {
    if (!m.is_square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return 0;
            w.swap_rows(k, swap_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m) {
    return m.is_square() && int_abs(determinant(m)) == 1;
}

std::size_t matrix_rank(const IntegerMatrix& m) {
    return smith_normal_form_factors(m).rank;
}

FormProperties form_properties(const IntegerMatrix& q) {
    if (!q.is_square() || !q.is_symmetric())
        throw Error("form_properties requires a symmetric matrix");
    const std::size_t n = q.rows();

    FormProperties p;
    p.rank = n;
    p.even = true;
    for (std::size_t i = 0; i < n; ++i)
        if (q.at(i, i) % 2 != 0) {
            p.even = false;
            break;
        }
    p.unimodular = int_abs(determinant(q)) == 1;

    // Symmetric Gaussian (congruence) reduction over Q. Exact; never
    // eigenvalues.
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(q.at(i, j));

    auto sym_add = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t k = 0; k < n; ++k) w[dst][k] += f * w[src][k];
        for (std::size_t k = 0; k < n; ++k) w[k][dst] += f * w[k][src];
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (w[k][k] == 0) {
            std::size_t j = n;
            for (std::size_t c = k + 1; c < n; ++c)
                if (w[k][c] != 0) {
                    j = c;
                    break;
                }
            if (j == n) {
                ++p.signature.zero;
                continue;
            }
            // Basis change e_k <- e_k ± e_j gives diagonal ±2 w[k][j] + w[j][j];
            // at most one sign can vanish since w[k][j] != 0.
            Rat plus = 2 * w[k][j] + w[j][j];
            sym_add(k, j, plus != 0 ? Rat(1) : Rat(-1));
        }
        if (w[k][k] > 0)
            ++p.signature.positive;
        else
            ++p.signature.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w[i][k] == 0) continue;
            Rat f = -w[i][k] / w[k][k];
            sym_add(i, k, f);
        }
    }

    if (p.signature.zero > 0)
        p.definiteness = Definiteness::Degenerate;
    else if (p.signature.positive > 0 && p.signature.negative > 0)
        p.definiteness = Definiteness::Indefinite;
    else if (p.signature.negative == 0)
        p.definiteness = Definiteness::PositiveDefinite;
    else
        p.definiteness = Definiteness::NegativeDefinite;
    return p;
}

} // namespace steinx

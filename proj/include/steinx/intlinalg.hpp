#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "steinx/integers.hpp"

namespace steinx {

// Dense integer matrix with exact arbitrary-precision entries, row-major.
// Degenerate shapes (0xn, nx0, 0x0) are first-class values.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix diagonal(const std::vector<Int>& d);
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix& other) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;
    bool is_diagonal() const;

    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& x) const; // this * x

    std::vector<Int> diagonal_entries() const; // length min(rows, cols)
    std::vector<Int> column(std::size_t j) const;
    IntegerMatrix submatrix(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor); // row_dst += f*row_src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor); // col_dst += f*col_src
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const; // small debug rendering

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

// u * d * v = source, u and v unimodular, d diagonal with a nonnegative
// divisor chain d1 | d2 | ... and zeros trailing.
struct SnfDecomposition {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
    IntegerMatrix source;
};

// Smith factors plus the inverses of u and v, which fall out of the same
// reduction and are what kernel and cokernel computations actually consume.
struct SnfFactors {
    SnfDecomposition snf;
    IntegerMatrix u_inv;
    IntegerMatrix v_inv;
    std::size_t rank = 0; // number of nonzero diagonal entries of d
};

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

struct SignatureTriple {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    bool operator==(const SignatureTriple&) const = default;
};

// Properties of a symmetric integer bilinear form. `rank` is the dimension
// of the underlying lattice, so positive + negative + zero = rank.
struct FormProperties {
    bool even = false;
    bool unimodular = false;
    Definiteness definiteness = Definiteness::PositiveDefinite;
    SignatureTriple signature;
    std::size_t rank = 0;
    bool operator==(const FormProperties&) const = default;
};

std::string definiteness_name(Definiteness d);

// Smith normal form with unimodular factors. Deterministic: the pivot is
// the minimal-absolute-value nonzero entry of the working submatrix, ties
// broken by lowest (row, col). Diagonal normalized nonnegative, the sign
// being absorbed into v.
SnfDecomposition smith_normal_form(const IntegerMatrix& m);
SnfFactors smith_normal_form_factors(const IntegerMatrix& m);

// Columns form a saturated (direct-summand) Z-basis of { x : m x = 0 }.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

// gcd of absolute values; 0 for an empty or all-zero list.
Int gcd_vector(const std::vector<Int>& v);
Int gcd_vector(const std::vector<long long>& v);

// Requires q symmetric. Signature by exact symmetric Gaussian reduction
// over the rationals; unimodularity by exact determinant.
FormProperties form_properties(const IntegerMatrix& q);

Int determinant(const IntegerMatrix& m); // Bareiss, exact; 1 for the 0x0 matrix
bool is_unimodular(const IntegerMatrix& m);
std::size_t matrix_rank(const IntegerMatrix& m);

} // namespace steinx

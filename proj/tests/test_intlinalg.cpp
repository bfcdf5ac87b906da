#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "steinx/error.hpp"
#include "steinx/intlinalg.hpp"
#include "test_util.hpp"

using namespace steinx;
using namespace steinx::testing;

namespace {

void check_snf_contract(const IntegerMatrix& m, const SnfDecomposition& s) {
    CHECK(s.u * s.d * s.v == m);
    CHECK(int_abs(cofactor_determinant(s.u)) == 1);
    CHECK(int_abs(cofactor_determinant(s.v)) == 1);
    const std::vector<Int> diag = s.d.diagonal_entries();
    CHECK(s.d.is_diagonal());
    bool seen_zero = false;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] == 0) seen_zero = true;
        if (seen_zero) CHECK(diag[i] == 0); // zeros trailing
        if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
    }
}

} // namespace

TEST_CASE("smith normal form: pinned examples") {
    SUBCASE("diag(2,3) has invariant factors 1, 6") {
        auto s = smith_normal_form(mat({{2, 0}, {0, 3}}));
        CHECK(s.d == mat({{1, 0}, {0, 6}}));
        check_snf_contract(mat({{2, 0}, {0, 3}}), s);
    }
    SUBCASE("zero 2x3 matrix") {
        auto s = smith_normal_form(IntegerMatrix(2, 3));
        CHECK(s.d == IntegerMatrix(2, 3));
        CHECK(s.u == IntegerMatrix::identity(2));
        CHECK(s.v == IntegerMatrix::identity(3));
    }
    SUBCASE("[[4,6],[2,2]] has invariant factors 2, 2") {
        // Frozen from both independent oracles: gcd of entries 2, |det| 4.
        auto s = smith_normal_form(mat({{4, 6}, {2, 2}}));
        CHECK(s.d == mat({{2, 0}, {0, 2}}));
        std::mt19937 rng(7);
        CHECK(snf_diagonal_oracle(mat({{4, 6}, {2, 2}}), rng) == vec({2, 2}));
        CHECK(snf_diagonal_minor_oracle(mat({{4, 6}, {2, 2}})) == vec({2, 2}));
        check_snf_contract(mat({{4, 6}, {2, 2}}), s);
    }
    SUBCASE("empty shapes") {
        check_snf_contract(IntegerMatrix(), smith_normal_form(IntegerMatrix()));
        check_snf_contract(IntegerMatrix(0, 3), smith_normal_form(IntegerMatrix(0, 3)));
        check_snf_contract(IntegerMatrix(3, 0), smith_normal_form(IntegerMatrix(3, 0)));
    }
}

TEST_CASE("smith normal form: 500 random matrices against the elementary-operation oracle") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 500; ++trial) {
        IntegerMatrix m = random_matrix(rng, 5);
        SnfDecomposition s = smith_normal_form(m);
        check_snf_contract(m, s);
        CHECK(s.d.diagonal_entries() == snf_diagonal_oracle(m, rng));
    }
}

TEST_CASE("smith normal form: determinantal-divisor cross-check") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        IntegerMatrix m = random_matrix(rng, 4);
        CHECK(smith_normal_form(m).d.diagonal_entries() == snf_diagonal_minor_oracle(m));
    }
}

TEST_CASE("smith normal form survives entry growth on larger matrices") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> entry(-99, 99);
    for (int trial = 0; trial < 5; ++trial) {
        IntegerMatrix m(7, 7);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = entry(rng);
        SnfDecomposition s = smith_normal_form(m);
        check_snf_contract(m, s);
        CHECK(s.d.diagonal_entries() == snf_diagonal_oracle(m, rng));
    }
}

TEST_CASE("smith normal form is deterministic") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        IntegerMatrix m = random_matrix(rng, 5);
        SnfDecomposition a = smith_normal_form(m);
        SnfDecomposition b = smith_normal_form(m);
        CHECK(a.u == b.u);
        CHECK(a.d == b.d);
        CHECK(a.v == b.v);
    }
}

TEST_CASE("kernel basis: pinned examples") {
    SUBCASE("(2) has trivial kernel") {
        IntegerMatrix k = kernel_basis(mat({{2}}));
        CHECK(k.rows() == 1);
        CHECK(k.cols() == 0);
    }
    SUBCASE("zero 1x2 matrix has the identity basis") {
        CHECK(kernel_basis(IntegerMatrix(1, 2)) == IntegerMatrix::identity(2));
    }
    SUBCASE("[[1,2]] kernel is spanned by (2,-1) up to sign") {
        IntegerMatrix m = mat({{1, 2}});
        IntegerMatrix k = kernel_basis(m);
        REQUIRE(k.cols() == 1);
        CHECK((m * k).is_zero());
        // Saturation and span: every small kernel vector is an integer
        // combination of the basis.
        for (long long a = -3; a <= 3; ++a)
            for (long long b = -3; b <= 3; ++b)
                if (a + 2 * b == 0) CHECK(in_integer_span(k, vec({a, b})));
    }
}

TEST_CASE("kernel basis: random matrices are annihilated, full rank, saturated") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        IntegerMatrix m = random_matrix(rng, 5);
        IntegerMatrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() == m.cols() - matrix_rank(m));
        if (k.cols() > 0) {
            // Saturated basis: all invariant factors of k equal 1.
            std::vector<Int> d = smith_normal_form(k).d.diagonal_entries();
            for (const Int& e : d) CHECK(e == 1);
        }
    }
}

TEST_CASE("gcd_vector: pinned examples and invariances") {
    CHECK(gcd_vector(vec({0, 5, 0, 0})) == 5);
    CHECK(gcd_vector(std::vector<Int>{}) == 0);
    CHECK(gcd_vector(vec({4, 6})) == 2);
    CHECK(gcd_vector(vec({0, 0, 0})) == 0);

    std::mt19937 rng(12);
    std::uniform_int_distribution<int> entry(-30, 30);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> v(len(rng));
        for (Int& e : v) e = entry(rng);
        Int g = gcd_vector(v);
        std::vector<Int> shuffled = v;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(gcd_vector(shuffled) == g);
        std::vector<Int> negated = v;
        for (Int& e : negated) e = -e;
        CHECK(gcd_vector(negated) == g);
        std::vector<Int> padded = v;
        padded.push_back(0);
        CHECK(gcd_vector(padded) == g);
    }
}

TEST_CASE("form_properties: pinned examples") {
    SUBCASE("hyperbolic form") {
        FormProperties p = form_properties(mat({{0, 1}, {1, 0}}));
        CHECK(p.even);
        CHECK(p.unimodular);
        CHECK(p.definiteness == Definiteness::Indefinite);
        CHECK(p.signature == SignatureTriple{1, 1, 0});
        CHECK(p.rank == 2);
    }
    SUBCASE("diag(-2)") {
        FormProperties p = form_properties(mat({{-2}}));
        CHECK(p.even);
        CHECK_FALSE(p.unimodular);
        CHECK(p.definiteness == Definiteness::NegativeDefinite);
    }
    SUBCASE("diag(-2,-2) + hyperbolic block is even and indefinite") {
        IntegerMatrix q = mat({{-2, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
        FormProperties p = form_properties(q);
        CHECK(p.even);
        CHECK(p.definiteness == Definiteness::Indefinite);
        CHECK(p.signature == SignatureTriple{1, 3, 0});
        // Exhaustive small-vector cross-check: an even form takes even
        // values, an indefinite one takes both signs.
        bool pos = false, neg = false;
        for (long long a = -3; a <= 3; ++a)
            for (long long b = -3; b <= 3; ++b)
                for (long long c = -3; c <= 3; ++c)
                    for (long long d = -3; d <= 3; ++d) {
                        std::vector<Int> x = vec({a, b, c, d});
                        Int val = 0;
                        for (std::size_t i = 0; i < 4; ++i)
                            for (std::size_t j = 0; j < 4; ++j) val += x[i] * q.at(i, j) * x[j];
                        CHECK(val % 2 == 0);
                        if (val > 0) pos = true;
                        if (val < 0) neg = true;
                    }
        CHECK(pos);
        CHECK(neg);
    }
    SUBCASE("degenerate and empty forms") {
        CHECK(form_properties(mat({{0}})).definiteness == Definiteness::Degenerate);
        CHECK(form_properties(IntegerMatrix()).rank == 0);
        CHECK(form_properties(IntegerMatrix()).unimodular);
    }
    SUBCASE("non-symmetric input is rejected") {
        CHECK_THROWS_AS(form_properties(mat({{0, 1}, {2, 0}})), Error);
        CHECK_THROWS_AS(form_properties(IntegerMatrix(2, 3)), Error);
    }
}

TEST_CASE("form_properties is a congruence invariant") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = dim(rng);
        IntegerMatrix q(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            q.at(i, i) = entry(rng);
            for (std::size_t j = i + 1; j < n; ++j) q.at(i, j) = q.at(j, i) = entry(rng);
        }
        IntegerMatrix p = random_unimodular(rng, n);
        IntegerMatrix conj = p.transpose() * q * p;
        CHECK(form_properties(conj) == form_properties(q));
        CHECK(int_abs(determinant(conj)) == int_abs(determinant(q)));
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        IntegerMatrix m = random_matrix(rng, 5);
        if (!m.is_square()) continue;
        CHECK(determinant(m) == cofactor_determinant(m));
    }
    CHECK(determinant(IntegerMatrix()) == 1);
}

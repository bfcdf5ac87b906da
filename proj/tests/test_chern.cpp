#include <doctest.h>

#include <algorithm>
#include <random>

#include "steinx/chern.hpp"
#include "steinx/error.hpp"
#include "test_util.hpp"

using namespace steinx;
using namespace steinx::testing;

namespace {

SteinHandlebody torsion_example(long long rot) {
    // One 1-handle, one 2-handle with word g^2 and the given rotation number.
    SteinHandlebody x;
    x.one_handles = 1;
    x.handles.push_back({rot % 2 == 0 ? 1 : 2, rot, {1, 1}, std::nullopt});
    x.linking = IntegerMatrix(1, 1);
    x.linking.at(0, 0) = int_from_i64(x.handles[0].tb - 1);
    return x;
}

} // namespace

TEST_CASE("c1 cochain is the rotation vector") {
    SteinHandlebody x = simple_handlebody({{1, 0}, {5, 4}, {-1, 0}});
    CHECK(c1_cochain(x) == std::vector<long long>{0, 4, 0});
    CHECK(c1_cochain(SteinHandlebody{}).empty());
}

TEST_CASE("c1 class: pinned examples") {
    SUBCASE("no 1-handles: free coordinates are the rotation numbers") {
        SteinHandlebody x = simple_handlebody({{1, 0}, {6, 5}});
        CohomologyClass c = c1_class(x);
        CHECK(c.free_coords == vec({0, 5}));
        CHECK(c.torsion_coords.empty());
    }
    SUBCASE("word g^2 handle: pure torsion residue rot mod 2") {
        for (long long rot : {0, 1, 2, 3, 5}) {
            CohomologyClass c = c1_class(torsion_example(rot));
            CHECK(c.free_coords.empty());
            REQUIRE(c.torsion_coords.size() == 1);
            CHECK(c.torsion_coords[0].order == 2);
            CHECK(c.torsion_coords[0].residue == static_cast<int>(((rot % 2) + 2) % 2));
        }
    }
    SUBCASE("D4 has the empty class") {
        CohomologyClass c = c1_class(SteinHandlebody{});
        CHECK(c.free_coords.empty());
        CHECK(c.torsion_coords.empty());
    }
}

TEST_CASE("c1 divisibility: pinned examples") {
    CHECK(c1_divisibility(simple_handlebody({{1, 0}, {8, 7}})) == 7);
    CHECK(c1_divisibility(simple_handlebody({{-1, 0}, {-1, 0}})) == 0);
    CHECK(c1_divisibility(simple_handlebody({{5, 4}, {7, 6}})) == 2);
    CHECK(c1_divisibility(torsion_example(1)) == 0); // torsion class
}

TEST_CASE("rotation divisor: pinned examples") {
    CHECK(rotation_divisor(SteinHandlebody{}) == 0);
    CHECK(rotation_divisor(simple_handlebody({{7, 6}, {11, 10}, {16, 15}})) == 1);
    CHECK(rotation_divisor(simple_handlebody({{-1, 0}, {-1, 0}})) == 0);
    SteinHandlebody with_one;
    with_one.one_handles = 1;
    CHECK_THROWS_AS(rotation_divisor(with_one), Error);
}

TEST_CASE("without 1-handles, divisibility equals the rotation divisor") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<std::size_t> len(1, 5);
    std::uniform_int_distribution<long long> rot(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<long long, long long>> spec;
        const std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) {
            long long r = rot(rng);
            spec.push_back({r + 1, r}); // tb + rot = 2r + 1, always odd
        }
        SteinHandlebody x = simple_handlebody(spec);
        CHECK(c1_divisibility(x) == int_from_i64(rotation_divisor(x)));
    }
}

TEST_CASE("divisibility is invariant under handle permutation and global rot negation") {
    SteinHandlebody x = simple_handlebody({{5, 4}, {-5, -6}, {3, 2}});
    const Int d = c1_divisibility(x);

    SteinHandlebody permuted = simple_handlebody({{3, 2}, {5, 4}, {-5, -6}});
    CHECK(c1_divisibility(permuted) == d);

    SteinHandlebody negated = simple_handlebody({{5, -4}, {-5, 6}, {3, -2}});
    CHECK(c1_divisibility(negated) == d);
}

TEST_CASE("divisibility through a 1-handle kernel matches the functional oracle") {
    // Boundary map [1, 3, 0]: functionals on the quotient are exactly those
    // vanishing on (1, 3, 0), so the divisibility of the Chern class is
    // gcd(r2 - 3 r1, r3) independent of any basis choice.
    std::mt19937 rng(4711);
    std::uniform_int_distribution<long long> rot(-8, 8);
    for (int trial = 0; trial < 60; ++trial) {
        const long long r1 = rot(rng), r2 = rot(rng), r3 = rot(rng);
        SteinHandlebody x;
        x.one_handles = 1;
        x.handles.push_back({r1 + 1, r1, {1}, std::nullopt});
        x.handles.push_back({r2 + 1, r2, {1, 1, 1}, std::nullopt});
        x.handles.push_back({r3 + 1, r3, {}, std::nullopt});
        x.linking = IntegerMatrix::diagonal(vec({r1, r2, r3}));
        REQUIRE(validate(x).empty());
        CHECK(c1_divisibility(x) == int_from_i64(std::gcd(r2 - 3 * r1, r3)));
        CHECK(homology(x).b2 == 2);
    }
}

TEST_CASE("divisibility of a boundary connected sum is the gcd") {
    SteinHandlebody a = simple_handlebody({{5, 4}, {9, 8}});   // divisibility 4
    SteinHandlebody b = simple_handlebody({{7, 6}});           // divisibility 6
    CHECK(c1_divisibility(boundary_connected_sum(a, b)) == 2);
    CHECK(c1_divisibility(boundary_connected_sum(a, SteinHandlebody{})) == 4);
}

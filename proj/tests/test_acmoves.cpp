#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "steinx/acmoves.hpp"
#include "steinx/error.hpp"
#include "test_util.hpp"

using namespace steinx;
using namespace steinx::testing;

namespace {

GroupPresentation pres(long long gens, std::vector<std::vector<long long>> relators) {
    return make_presentation(gens, std::move(relators));
}

} // namespace

TEST_CASE("canonicalization") {
    SUBCASE("free and cyclic reduction") {
        GroupPresentation p = canonicalize(pres(2, {{1, -2, 2, -1, 1}}));
        REQUIRE(p.relators.size() == 1);
        CHECK(p.relators[0] == std::vector<long long>{1});
    }
    SUBCASE("relators sort and generators renumber by first occurrence") {
        GroupPresentation p = canonicalize(pres(2, {{2, 2}, {2}}));
        CHECK(p.relators == std::vector<std::vector<long long>>{{1}, {1, 1}});
    }
    SUBCASE("conjugation rotates a cyclically reduced relator") {
        GroupPresentation p = pres(2, {{1, 2}});
        AcMove rotate{AcMove::Kind::Conjugate, 0, 0, false, -1};
        GroupPresentation q = canonicalize(apply_move(canonicalize(p), rotate));
        REQUIRE(q.relators.size() == 1);
        CHECK(q.relators[0].size() == 2);
    }
}

TEST_CASE("ac_reduce: pinned examples") {
    SUBCASE("<x | x> trivializes by one destabilization") {
        AcResult r = ac_reduce(pres(1, {{1}}), 4, 1000);
        CHECK(r.trivialized);
        CHECK(r.presentation.generators == 0);
        CHECK(r.presentation.relators.empty());
        REQUIRE(r.trace.size() == 1);
        CHECK(r.trace[0].kind == AcMove::Kind::Destabilize);
        CHECK(replay_trace(pres(1, {{1}}), r.trace) == r.presentation);
    }
    SUBCASE("<x,y | xy, y> trivializes with a replayable trace") {
        GroupPresentation p = pres(2, {{1, 2}, {2}});
        AcResult r = ac_reduce(p, 8, 200000);
        CHECK(r.trivialized);
        CHECK(r.presentation.generators == 0);
        CHECK(replay_trace(p, r.trace) == r.presentation);
    }
    SUBCASE("<x | x^2> is blocked by the abelianization obstruction") {
        AcResult r = ac_reduce(pres(1, {{1, 1}}), 6, 10000);
        CHECK_FALSE(r.trivialized);
        REQUIRE(r.obstruction.has_value());
        CHECK(*r.obstruction == "abelianization Z/2");
    }
    SUBCASE("the empty presentation is already trivial") {
        AcResult r = ac_reduce(GroupPresentation{}, 1, 10);
        CHECK(r.trivialized);
        CHECK(r.trace.empty());
    }
}

TEST_CASE("trivializability_obstruction: pinned examples") {
    CHECK(trivializability_obstruction(pres(1, {{1, 1}})) == "abelianization Z/2");
    CHECK_FALSE(trivializability_obstruction(pres(1, {{1}})).has_value());
    CHECK(trivializability_obstruction(pres(2, {{1, 2, -1, -2}})) == "abelianization Z^2");
    CHECK(trivializability_obstruction(pres(2, {{1}, {2, 2, 2}})) == "abelianization Z/3");
    CHECK_FALSE(trivializability_obstruction(GroupPresentation{}).has_value());
}

TEST_CASE("obstruction soundness: blocked presentations never trivialize") {
    std::mt19937 rng(456);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<long long> letter(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<long long>> relators(2);
        for (auto& r : relators) {
            int l = len(rng);
            for (int i = 0; i < l; ++i) r.push_back(sign(rng) ? letter(rng) : -letter(rng));
        }
        GroupPresentation p = pres(2, relators);
        AcResult r = ac_reduce(p, 4, 5000);
        if (trivializability_obstruction(p)) CHECK_FALSE(r.trivialized);
        if (r.trivialized) {
            CHECK_FALSE(trivializability_obstruction(p).has_value());
            CHECK(replay_trace(p, r.trace) == r.presentation);
        }
    }
}

TEST_CASE("random trivializable presentations are recovered within budget") {
    std::mt19937 rng(20250101);
    std::uniform_int_distribution<long long> gens(1, 2);
    std::uniform_int_distribution<std::size_t> depth(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        GroupPresentation p = random_scrambled_trivial(rng, gens(rng), depth(rng));
        AcResult r = ac_reduce(p, 10, 300000);
        CHECK(r.trivialized);
        if (r.trivialized) CHECK(replay_trace(p, r.trace) == r.presentation);
    }
}

TEST_CASE("exhausted search returns the minimal state found") {
    // Free group Z * Z: no zero-generator state exists; the search must
    // report exhaustion and keep the presentation's canonical form.
    GroupPresentation p = pres(2, {});
    AcResult r = ac_reduce(p, 2, 50);
    CHECK_FALSE(r.trivialized);
    REQUIRE(r.obstruction.has_value()); // abelianization Z^2

    // No obstruction, but a one-state budget: exhausted with a replayable
    // best-state trace no worse than the start.
    GroupPresentation q = pres(2, {{1, 2}, {2}});
    AcResult tiny = ac_reduce(q, 8, 1);
    CHECK_FALSE(tiny.trivialized);
    CHECK_FALSE(tiny.obstruction.has_value());
    CHECK(replay_trace(q, tiny.trace) == tiny.presentation);
    CHECK(tiny.presentation.generators <= 2);
}

TEST_CASE("reduce_handlebody") {
    SUBCASE("no 1-handles: unchanged") {
        SteinHandlebody x = unknot_handlebody();
        ReduceOutcome out = reduce_handlebody(x, 4, 100);
        REQUIRE(out.reduced.has_value());
        CHECK(*out.reduced == x);
    }
    SUBCASE("cancelling pair disappears, spectators survive with their rot data") {
        SteinHandlebody x;
        x.one_handles = 1;
        x.handles.push_back({2, 1, {1}, std::nullopt}); // cancels against the 1-handle
        x.handles.push_back({-1, 0, {}, std::nullopt});
        x.handles.push_back({5, 4, {}, std::nullopt});
        x.linking = mat({{1, 0, 0}, {0, -2, 0}, {0, 0, 4}});
        REQUIRE(validate(x).empty());

        const Homology before = homology(x);
        ReduceOutcome out = reduce_handlebody(x, 8, 10000);
        REQUIRE(out.reduced.has_value());
        const SteinHandlebody& red = *out.reduced;
        CHECK(red.one_handles == 0);
        REQUIRE(red.handles.size() == 2);
        CHECK(red.handles[0].rot == 0);
        CHECK(red.handles[1].rot == 4);
        CHECK(red.handles[0].tb == -1);
        CHECK(red.handles[1].tb == 5);
        CHECK(red.linking == mat({{-2, 0}, {0, 4}}));

        const Homology after = homology(red);
        CHECK(after.b2 == before.b2);
        CHECK(after.torsion_orders == before.torsion_orders);
        CHECK(validate(red).empty());
    }
    SUBCASE("obstructed records come back exhausted") {
        SteinHandlebody x;
        x.one_handles = 1;
        x.handles.push_back({1, 0, {1, 1}, std::nullopt}); // word g^2: Z/2
        x.linking = mat({{0}});
        ReduceOutcome out = reduce_handlebody(x, 6, 1000);
        CHECK_FALSE(out.reduced.has_value());
        CHECK(out.search.obstruction.has_value());
    }
    SUBCASE("two 1-handles with a two-letter word handle") {
        SteinHandlebody x;
        x.one_handles = 2;
        x.handles.push_back({2, 1, {1, 2}, std::nullopt});
        x.handles.push_back({2, 1, {2}, std::nullopt});
        x.handles.push_back({-1, 0, {}, std::nullopt});
        x.linking = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}});
        REQUIRE(validate(x).empty());
        ReduceOutcome out = reduce_handlebody(x, 10, 200000);
        REQUIRE(out.reduced.has_value());
        CHECK(out.reduced->one_handles == 0);
        REQUIRE(out.reduced->handles.size() == 1);
        CHECK(out.reduced->handles[0].rot == 0);
        CHECK(homology(*out.reduced).b2 == homology(x).b2);
    }
}

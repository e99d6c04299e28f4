#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "levelcross/clustered_coloring.hpp"
#include "levelcross/constants_lab.hpp"
#include "levelcross/discrete_solver.hpp"
#include "levelcross/generators.hpp"
#include "levelcross/witness_verify.hpp"

using namespace levelcross;

TEST_CASE("singleton search on pinned labelings") {
    {
        CellLabeling constant(GridShape(2, 3), 1);
        for (auto& v : constant.flat_mutable()) v = 4;
        const auto w = singleton_sufficient(constant);
        REQUIRE(w.has_value());
        CHECK(w->value == LatticePoint{4});
        CHECK(static_cast<std::int64_t>(w->cells.size()) == 9);
        CHECK(naive_value_crossing(constant, w->value));
    }
    {
        // columns labeled by their own index: every column crosses vertically
        CellLabeling cols(GridShape(2, 3), 1);
        for (std::int64_t lin = 0; lin < 9; ++lin) {
            cols.set_value(lin, std::vector<std::int64_t>{cell_at(lin, cols.shape()).i[0]});
        }
        const auto w = singleton_sufficient(cols);
        REQUIRE(w.has_value());
        CHECK(w->value == LatticePoint{1});  // lexicographically smallest value wins
        CHECK(w->axis == 2);
        CHECK(w->cells == std::vector<CellIndex>{CellIndex{1, 1}, CellIndex{1, 2}, CellIndex{1, 3}});
    }
}

TEST_CASE("exhaustive run at k = 1 is trivial") {
    const ExhaustiveReport r = exhaustive_check_c1(1, 1, 2);
    CHECK(r.enumerated == 1);
    CHECK(r.verified == 1);
    CHECK(r.all_passed);
}

TEST_CASE("exhaustive run at k = 2, m = 1, radius 2") {
    const ExhaustiveReport r = exhaustive_check_c1(2, 1, 2);
    CHECK(r.all_passed);
    CHECK(r.verified == r.enumerated);
    // hand count: F(1,2), F(2,1) within 1 of 0; F(2,2) within 1 of both
    CHECK(r.enumerated == 19);
}

TEST_CASE("exhaustive runs agree across worker counts") {
    const ExhaustiveReport solo = exhaustive_check_c1(2, 0, 2, 2'000'000'000ULL, 1);
    const ExhaustiveReport multi = exhaustive_check_c1(2, 0, 2, 2'000'000'000ULL, 3);
    CHECK(solo.enumerated == multi.enumerated);
    CHECK(solo.verified == multi.verified);
    CHECK(solo.all_passed == multi.all_passed);
}

TEST_CASE("budget overruns are reported, not attempted") {
    CHECK_THROWS_AS(exhaustive_check_c1(3, 1, 2, 10), InfeasibleEnumerationError);
}

TEST_CASE("condition and crossings are translation invariant in value space") {
    for (int trial = 0; trial < 20; ++trial) {
        const CellLabeling f = random_valid_labeling_walk(GridShape(2, 3), 1, 600 + trial);
        CellLabeling shifted(f.shape(), 1);
        for (std::int64_t lin = 0; lin < f.shape().cell_count(); ++lin) {
            shifted.set_value(lin, std::vector<std::int64_t>{f.value(lin)[0] + 17});
        }
        CHECK(validate_condition(f, 1).size() == validate_condition(shifted, 1).size());
        const auto a = singleton_sufficient(f);
        const auto b = singleton_sufficient(shifted);
        REQUIRE(a.has_value() == b.has_value());
        if (a.has_value()) {
            CHECK(a->cells == b->cells);
            CHECK(a->axis == b->axis);
            CHECK(b->value == LatticePoint{a->value.coords[0] + 17});
        }
    }
}

TEST_CASE("the 7^3 construction beats every single value") {
    const CellLabeling f = build_prop53_witness();
    CHECK(f.shape() == GridShape(3, 7));
    CHECK(f.value_dim() == 2);

    // all values lie in {0,1}^2, so the condition holds at every m
    for (std::int64_t lin = 0; lin < f.shape().cell_count(); ++lin) {
        for (const std::int64_t v : f.value(lin)) {
            CHECK(v >= 0);
            CHECK(v <= 1);
        }
    }
    for (int m = 0; m <= 2; ++m) {
        CHECK(validate_condition(f, m).empty());
    }

    // no single value crosses
    CHECK_FALSE(singleton_sufficient(f).has_value());
    // the naive flood agrees for all four occurring values
    for (const std::int64_t a : {0, 1}) {
        for (const std::int64_t b : {0, 1}) {
            CHECK_FALSE(naive_value_crossing(f, LatticePoint{a, b}));
        }
    }

    // every monochromatic component stays below the window size
    for (const std::int64_t a : {0, 1}) {
        for (const std::int64_t b : {0, 1}) {
            std::vector<CellIndex> cells;
            for (std::int64_t lin = 0; lin < f.shape().cell_count(); ++lin) {
                const auto v = f.value(lin);
                if (v[0] == a && v[1] == b) cells.push_back(cell_at(lin, f.shape()));
            }
            for (const auto& comp : components_min_dim(cells, 0, f.shape())) {
                CHECK(comp.size() <= 6);
            }
        }
    }

    // while a two-value set does cross
    const DiscreteWitness w = solve(f, 0);
    CHECK(w.value_set.size() == 2);
    const auto check = verify_discrete_witness(f, w);
    CHECK_MESSAGE(check.ok, check.reason);
}

TEST_CASE("exhaustive verdicts double-check against the naive tester") {
    // spot check on random valid labelings rather than the full enumeration
    for (int trial = 0; trial < 25; ++trial) {
        const CellLabeling f = random_valid_labeling_walk(GridShape(2, 3), 1, 7100 + trial);
        const auto w = singleton_sufficient(f);
        REQUIRE(w.has_value());  // n = 2 valid labelings always admit one
        CHECK(naive_value_crossing(f, w->value));
    }
}

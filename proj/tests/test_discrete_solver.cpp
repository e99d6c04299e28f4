#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "levelcross/constants_lab.hpp"
#include "levelcross/discrete_solver.hpp"
#include "levelcross/generators.hpp"
#include "levelcross/witness_verify.hpp"

using namespace levelcross;

namespace {

CellLabeling column_index_labeling(const GridShape& shape) {
    CellLabeling f(shape, shape.n - 1);
    for (std::int64_t lin = 0; lin < shape.cell_count(); ++lin) {
        const CellIndex c = cell_at(lin, shape);
        std::vector<std::int64_t> v(static_cast<std::size_t>(shape.n - 1), c.i[0]);
        f.set_value(lin, v);
    }
    return f;
}

// Oracle for the k = 3 example: some value set of size <= 2 (a single value
// or a 1-connected pair) admits a crossing, found by direct search.
bool small_value_set_crossing_exists(const CellLabeling& f) {
    const GridShape& shape = f.shape();
    std::vector<LatticePoint> values;
    for (std::int64_t lin = 0; lin < shape.cell_count(); ++lin) {
        values.push_back(f.value_point(cell_at(lin, shape)));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<std::vector<LatticePoint>> candidates;
    for (const auto& v : values) candidates.push_back({v});
    for (const auto& a : values) {
        for (const auto& b : values) {
            if (a < b && linf_distance(a, b) <= 1) candidates.push_back({a, b});
        }
    }
    for (const auto& cand : candidates) {
        std::vector<CellIndex> cells;
        for (std::int64_t lin = 0; lin < shape.cell_count(); ++lin) {
            const LatticePoint v = f.value_point(cell_at(lin, shape));
            if (std::find(cand.begin(), cand.end(), v) != cand.end()) {
                cells.push_back(cell_at(lin, shape));
            }
        }
        for (const auto& comp : components_min_dim(cells, 0, shape)) {
            if (!crossing_axes(comp, shape).empty()) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("validate_condition on pinned labelings") {
    {
        CellLabeling f(GridShape(2, 3), 1);
        for (std::int64_t lin = 0; lin < 9; ++lin) f.set_value(lin, std::vector<std::int64_t>{4});
        CHECK(validate_condition(f, 0).empty());
        CHECK(validate_condition(f, 1).empty());
    }
    {
        const CellLabeling f = column_index_labeling(GridShape(2, 2));
        CHECK(validate_condition(f, 1).empty());
    }
    {
        CellLabeling f(GridShape(2, 2), 1);
        f.set_value(CellIndex{2, 2}, LatticePoint{5});
        const auto violations = validate_condition(f, 1);
        REQUIRE_FALSE(violations.empty());
        const auto hit = std::find(violations.begin(), violations.end(),
                                   std::pair<CellIndex, CellIndex>{CellIndex{1, 2}, CellIndex{2, 2}});
        CHECK(hit != violations.end());
        // sorted and deterministic
        CHECK(std::is_sorted(violations.begin(), violations.end()));
    }
}

TEST_CASE("violations are data, m out of range is an error") {
    CellLabeling f(GridShape(2, 2), 1);
    CHECK_THROWS_AS(validate_condition(f, 2), InvalidInputError);
    CHECK_THROWS_AS(validate_condition(f, -1), InvalidInputError);
    CellLabeling wrong_dim(GridShape(2, 2), 2);
    CHECK_THROWS_AS(validate_condition(wrong_dim, 0), InvalidInputError);
}

TEST_CASE("solve on a constant labeling returns the whole grid") {
    CellLabeling f(GridShape(2, 3), 1);
    for (std::int64_t lin = 0; lin < 9; ++lin) f.set_value(lin, std::vector<std::int64_t>{7});
    const DiscreteWitness w = solve(f, 1);
    CHECK(w.value_set.contains(LatticePoint{7}));
    CHECK(static_cast<std::int64_t>(w.cells.size()) == 9);
    CHECK(w.bound == 2);
    const auto check = verify_discrete_witness(f, w);
    CHECK_MESSAGE(check.ok, check.reason);
}

TEST_CASE("column labeling crosses vertically within a two-value set") {
    const CellLabeling f = column_index_labeling(GridShape(2, 3));
    REQUIRE(validate_condition(f, 1).empty());
    CHECK(small_value_set_crossing_exists(f));  // oracle: such a witness exists at all
    const DiscreteWitness w = solve(f, 1);
    CHECK(w.bound == 2);
    CHECK(w.value_set.size() <= 2);
    CHECK(w.axis == 2);
    const auto check = verify_discrete_witness(f, w);
    CHECK_MESSAGE(check.ok, check.reason);
}

TEST_CASE("n = 2, m = 0 always admits a singleton value set") {
    for (int trial = 0; trial < 40; ++trial) {
        const CellLabeling f = random_valid_labeling_walk(GridShape(2, 4), 0, 5000 + trial);
        const DiscreteWitness w = solve(f, 0);
        CHECK(w.bound == 1);
        CHECK(w.value_set.size() == 1);
        CHECK(verify_discrete_witness(f, w));
        CHECK(singleton_sufficient(f).has_value());  // independent oracle
    }
}

TEST_CASE("n = 1 is the trivial column") {
    CellLabeling f(GridShape(1, 4), 0);
    const DiscreteWitness w = solve(f, 0);
    CHECK(w.value_set.size() == 1);
    CHECK(w.value_set.contains(LatticePoint{}));
    CHECK(w.cells.size() == 4);
    CHECK(w.axis == 1);
    CHECK(w.bound == 1);
    CHECK(verify_discrete_witness(f, w));
}

TEST_CASE("invalid labelings are rejected with violations counted") {
    CellLabeling f(GridShape(2, 2), 1);
    f.set_value(CellIndex{2, 2}, LatticePoint{5});
    CHECK_THROWS_AS(solve(f, 1), InvalidInputError);
}

TEST_CASE("random valid labelings satisfy every witness invariant") {
    const std::pair<int, int> configs[] = {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};
    for (const auto& [n, m] : configs) {
        const GridShape shape(n, n == 2 ? 6 : 4);
        for (int trial = 0; trial < 50; ++trial) {
            const std::uint64_t seed = static_cast<std::uint64_t>(n * 100 + m * 10) * 1000ULL +
                                       static_cast<std::uint64_t>(trial);
            const CellLabeling f = trial % 2 == 0 ? random_valid_labeling_walk(shape, m, seed)
                                                  : random_valid_labeling_poly(shape, m, seed);
            REQUIRE(validate_condition(f, m).empty());
            const DiscreteWitness w = solve(f, m);
            const auto check = verify_discrete_witness(f, w);
            REQUIRE_MESSAGE(check.ok, check.reason);
            std::int64_t expected_bound = 1;
            for (int i = 1; i <= n - 1; ++i) expected_bound *= i * (m + 1);
            CHECK(w.bound == expected_bound);
            CHECK(static_cast<std::int64_t>(w.value_set.size()) <= expected_bound);

            // structural validity persists at smaller parameters
            for (int weaker = 0; weaker < m; ++weaker) {
                CHECK(verify_discrete_witness(f, w, /*check_bound=*/false));
            }
        }
    }
}

TEST_CASE("the m-condition forces the coarse bound on every adjacency") {
    for (int trial = 0; trial < 30; ++trial) {
        const int m = trial % 3;
        const GridShape shape(3, 4);
        const CellLabeling f = random_valid_labeling_walk(shape, m, 777 + trial);
        const int d = f.value_dim();
        const std::int64_t cells = shape.cell_count();
        for (std::int64_t a = 0; a < cells; ++a) {
            for (std::int64_t b = a + 1; b < cells; ++b) {
                if (intersection_dim(cell_at(a, shape), cell_at(b, shape), shape) < 0) continue;
                std::int64_t dist = 0;
                for (int s = 0; s < d; ++s) {
                    dist = std::max(dist, std::abs(f.flat()[a * d + s] - f.flat()[b * d + s]));
                }
                CHECK(dist <= m + 1);
            }
        }
    }
}

TEST_CASE("shrink keeps P inside the cluster and over the used values") {
    for (int trial = 0; trial < 30; ++trial) {
        const GridShape shape(3, 4);
        const int m = trial % 3;
        const CellLabeling f = random_valid_labeling_walk(shape, m, 31337 + trial);
        const DiscreteWitness full = solve(f, m, false);
        const DiscreteWitness small = solve(f, m, true);
        CHECK(small.cells == full.cells);
        CHECK(small.value_set.size() <= full.value_set.size());
        for (const auto& p : small.value_set.points()) {
            CHECK(full.value_set.contains(p));
        }
        const auto check = verify_discrete_witness(f, small);
        REQUIRE_MESSAGE(check.ok, check.reason);
    }
}

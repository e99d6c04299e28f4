#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "levelcross/builtin_functions.hpp"
#include "levelcross/continuous_solver.hpp"
#include "levelcross/generators.hpp"
#include "levelcross/steinhaus.hpp"
#include "levelcross/witness_verify.hpp"

using namespace levelcross;

namespace {

ContinuousFn constant_fn(int n, std::vector<double> value, double bound) {
    ContinuousFn f;
    f.n = n;
    f.lipschitz = 1e-6;  // any positive constant is a valid declaration
    f.bound = bound;
    f.eval = [value](std::span<const double>, std::span<double> out) {
        std::copy(value.begin(), value.end(), out.begin());
    };
    return f;
}

}  // namespace

TEST_CASE("rescale maps outputs into the unit cube") {
    {
        const ContinuousFn zero = constant_fn(3, {0.0, 0.0}, 1.0);
        const RescaledFn r = rescale(zero);
        const auto y = r.fn({0.3, 0.4, 0.5});
        CHECK(y[0] == doctest::Approx(0.5));
        CHECK(y[1] == doctest::Approx(0.5));
        CHECK(r.scale == doctest::Approx(2.0));
    }
    {
        const ContinuousFn proj = make_projection(2);
        const RescaledFn r = rescale(proj);
        CHECK(r.fn({0.0, 0.9})[0] == doctest::Approx(0.5));
        CHECK(r.fn({1.0, 0.9})[0] == doctest::Approx(1.0));
        CHECK(r.fn.lipschitz == doctest::Approx(0.5));
    }
}

TEST_CASE("rescale round-trips points and radii") {
    const ContinuousFn proj = make_projection(2);
    const RescaledFn r = rescale(proj);
    const std::vector<double> p0{0.75};
    const auto p = r.map_back_point(p0);
    CHECK(p[0] == doctest::Approx(2.0 * 1.0 * (0.75 - 0.5)));
    CHECK(r.map_back_radius(0.05) == doctest::Approx(0.1));
}

TEST_CASE("resolution choice solves the strict inequality") {
    CHECK(choose_resolution(2, 0.1) == 16);
    CHECK(choose_resolution(3, 1.0) == 5);
    // strictness: 3*1/(2*15) == 0.1 exactly, so 15 must be rejected
    CHECK(choose_resolution(2, 0.1) > 15);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const double eps = std::ldexp(1.0, -static_cast<int>(rng() % 8)) *
                           (1.0 + static_cast<double>(rng() % 1000) / 1000.0);
        CHECK(choose_resolution(n, 2 * eps) <= choose_resolution(n, eps));
    }
    CHECK_THROWS_AS(choose_resolution(1, 0.1), InvalidInputError);
    CHECK_THROWS_AS(choose_resolution(2, 0.0), InvalidInputError);
}

TEST_CASE("discretize labels constants uniformly") {
    const ContinuousFn c = constant_fn(2, {0.3}, 1.0);
    const RescaledFn r = rescale(c);  // constant 0.65
    const CellLabeling labels = discretize(r, 4);
    const std::int64_t expected = static_cast<std::int64_t>(std::floor(0.65 * 4)) + 1;
    for (std::int64_t lin = 0; lin < labels.shape().cell_count(); ++lin) {
        CHECK(labels.value(lin)[0] == expected);
    }
}

TEST_CASE("discretize assigns the cube containing each center value") {
    const ContinuousFn proj = make_projection(2);  // rescaled: x1/2 + 1/2 in [1/2, 1]
    const RescaledFn r = rescale(proj);
    const CellLabeling labels = discretize(r, 2);
    const std::int64_t m = labels.shape().k;
    for (std::int64_t lin = 0; lin < labels.shape().cell_count(); ++lin) {
        const CellIndex c = cell_at(lin, labels.shape());
        const double y = (static_cast<double>(c.i[0]) - 0.5) / (2.0 * static_cast<double>(m)) + 0.5;
        const std::int64_t cube = std::min<std::int64_t>(2, static_cast<std::int64_t>(y * 2) + 1);
        CHECK(labels.value(lin)[0] == cube);
    }
}

TEST_CASE("discretized labelings always pass the m = 0 hypothesis") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        ContinuousFn f;
        f.n = 2;
        const double a = static_cast<double>(rng() % 300) / 100.0 - 1.5;
        const double b = static_cast<double>(rng() % 300) / 100.0 - 1.5;
        const double c = static_cast<double>(rng() % 300) / 100.0 - 1.5;
        f.lipschitz = std::abs(a) + 2.0 * std::abs(b) + std::abs(c) + 0.05;
        f.bound = std::abs(a) + std::abs(b) + std::abs(c) + 0.05;
        f.eval = [a, b, c](std::span<const double> x, std::span<double> out) {
            out[0] = a * x[0] + b * x[1] * x[1] + c * x[0] * x[1];
        };
        const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 12);
        const CellLabeling labels = discretize(rescale(f), k);
        CHECK(validate_condition(labels, 0).empty());
    }
}

TEST_CASE("level crossing witnesses verify for the builtin functions") {
    for (const char* name : {"proj", "linear", "quad"}) {
        const ContinuousFn f = builtin_function(name);
        for (const double eps : {0.1, 0.05}) {
            const ContinuousWitness w = approximate_level_crossing(f, eps);
            const auto check = verify_continuous_witness(f, w);
            REQUIRE_MESSAGE(check.ok, name << " eps=" << eps << ": " << check.reason);
            CHECK(!crossing_axes(w.cells, w.grid).empty());
        }
    }
}

TEST_CASE("projection bands are vertical and level-accurate") {
    const ContinuousFn f = make_projection(2);
    const ContinuousWitness w = approximate_level_crossing(f, 0.05);
    const auto axes = crossing_axes(w.cells, w.grid);
    CHECK(std::find(axes.begin(), axes.end(), 2) != axes.end());
    // every cell center's x1 is near p
    for (const auto& c : w.cells) {
        const double x1 = (static_cast<double>(c.i[0]) - 0.5) / static_cast<double>(w.grid.k);
        CHECK(std::abs(x1 - w.p[0]) < 0.05);
    }
}

TEST_CASE("the one-dimensional case degenerates to the whole interval") {
    const ContinuousFn f = make_projection(1);
    const ContinuousWitness w = approximate_level_crossing(f, 0.25);
    CHECK(w.p.empty());
    CHECK(w.axis == 1);
    CHECK(w.cells.size() == 1);
    CHECK(verify_continuous_witness(f, w));
}

TEST_CASE("hausdorff distance basics") {
    const std::vector<std::vector<double>> a{{0.0}}, b{{1.0}};
    CHECK(hausdorff_distance(a, a) == doctest::Approx(0.0));
    CHECK(hausdorff_distance(a, b) == doctest::Approx(1.0));

    std::vector<std::vector<double>> line;
    for (int i = 0; i <= 10; ++i) line.push_back({static_cast<double>(i) / 10.0, 0.0});
    const std::vector<std::vector<double>> origin{{0.0, 0.0}};
    CHECK(hausdorff_distance(line, origin) == doctest::Approx(1.0));

    CHECK_THROWS_AS(hausdorff_distance({}, a), InvalidInputError);
    CHECK_THROWS_AS(hausdorff_distance(a, {{1.0, 2.0}}), InvalidInputError);
}

TEST_CASE("refinement of a constant function pins p to the constant") {
    // p is the center of the chosen value cube, so it moves slightly with the
    // resolution; what is exact is that every p stays epsilon-close to the
    // constant and the witness is always the whole cube.
    const ContinuousFn f = constant_fn(2, {0.25}, 1.0);
    const RefineResult res = refine_sequence(f, 0.2, 3);
    REQUIRE(res.witnesses.size() == 3);
    double eps = 0.2;
    for (const auto& w : res.witnesses) {
        CHECK(std::abs(w.p[0] - 0.25) < eps);
        CHECK(static_cast<std::int64_t>(w.cells.size()) == w.grid.cell_count());
        eps /= 2.0;
    }
    for (const auto& d : res.diagnostics) {
        CHECK(d.unions_intersect);
        CHECK(d.hausdorff == doctest::Approx(0.0));
    }
}

TEST_CASE("refinement drift obeys the triangle bound when unions meet") {
    const ContinuousFn f = make_linear_diff();
    const RefineResult res = refine_sequence(f, 0.2, 4);
    REQUIRE(res.witnesses.size() == 4);
    double eps = 0.2;
    for (std::size_t j = 0; j + 1 < res.witnesses.size(); ++j, eps /= 2.0) {
        const auto check_a = verify_continuous_witness(f, res.witnesses[j]);
        REQUIRE_MESSAGE(check_a.ok, check_a.reason);
        if (res.diagnostics[j].unions_intersect) {
            CHECK(res.diagnostics[j].p_drift <= eps + eps / 2.0 + 1e-12);
        }
        CHECK(res.diagnostics[j].hausdorff >= 0.0);
    }
    // all witnesses share the majority axis here: the diagonal band crosses both
    for (const auto& w : res.witnesses) CHECK(w.axis == res.witnesses[0].axis);
}

TEST_CASE("distance field bundle matches a naive evaluation") {
    const CellLabeling coloring = random_coloring(GridShape(2, 6), 2, 99);
    const ContinuousFn f = make_distance_coloring_fn(coloring);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const double x0 = static_cast<double>(rng() % 1000) / 1000.0;
        const double x1 = static_cast<double>(rng() % 1000) / 1000.0;
        const auto got = f({x0, x1});
        // naive scan over all color-1 cells
        double want = 1.0;
        for (std::int64_t lin = 0; lin < coloring.shape().cell_count(); ++lin) {
            if (coloring.value(lin)[0] != 1) continue;
            const CellIndex c = cell_at(lin, coloring.shape());
            double dist = 0;
            for (int s = 0; s < 2; ++s) {
                const double lo = static_cast<double>(c.i[s] - 1) / 6.0;
                const double hi = static_cast<double>(c.i[s]) / 6.0;
                dist = std::max({dist, lo - (s == 0 ? x0 : x1), (s == 0 ? x0 : x1) - hi});
            }
            want = std::min(want, dist);
        }
        CHECK(got[0] == doctest::Approx(want));
    }
}

TEST_CASE("distance-field chessboard agrees with the direct search") {
    {
        CellLabeling constant(GridShape(2, 3), 1);
        for (auto& v : constant.flat_mutable()) v = 1;
        const ChessboardWitness w = chessboard_via_distance_fields(constant);
        CHECK(w.color == 1);
        CHECK(verify_chessboard_witness(constant, w));
    }
    {
        CellLabeling diagonal(GridShape(2, 2), 1);
        auto flat = diagonal.flat_mutable();
        flat[0] = 1;
        flat[1] = 2;
        flat[2] = 2;
        flat[3] = 1;
        const ChessboardWitness w = chessboard_via_distance_fields(diagonal);
        const auto check = verify_chessboard_witness(diagonal, w);
        REQUIRE_MESSAGE(check.ok, check.reason);
        const ChessboardWitness direct = find_crossing(diagonal);
        CHECK(verify_chessboard_witness(diagonal, direct));
    }
    for (int trial = 0; trial < 5; ++trial) {
        const CellLabeling coloring = random_coloring(GridShape(3, 4), 3, 4000 + trial);
        const ChessboardWitness w = chessboard_via_distance_fields(coloring);
        const auto check = verify_chessboard_witness(coloring, w);
        REQUIRE_MESSAGE(check.ok, check.reason);
    }
}

TEST_CASE("declared constants are honored by the builtins") {
    std::mt19937_64 rng(17);
    for (const char* name : {"proj", "linear", "quad", "sine"}) {
        const ContinuousFn f = builtin_function(name);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<double> x(static_cast<std::size_t>(f.n)), y(static_cast<std::size_t>(f.n));
            for (auto& v : x) v = static_cast<double>(rng() % 10000) / 10000.0;
            for (auto& v : y) v = static_cast<double>(rng() % 10000) / 10000.0;
            const auto fx = f(x), fy = f(y);
            double out_gap = 0, in_gap = 0;
            for (int s = 0; s < f.n - 1; ++s) out_gap = std::max(out_gap, std::abs(fx[s] - fy[s]));
            for (int s = 0; s < f.n; ++s) in_gap = std::max(in_gap, std::abs(x[s] - y[s]));
            CHECK(out_gap <= f.lipschitz * in_gap + 1e-12);
            for (int s = 0; s < f.n - 1; ++s) CHECK(std::abs(fx[s]) <= f.bound);
        }
    }
}

TEST_CASE("bad arguments are rejected") {
    const ContinuousFn f = make_projection(2);
    CHECK_THROWS_AS(approximate_level_crossing(f, 0.0), InvalidInputError);
    CHECK_THROWS_AS(refine_sequence(f, 0.1, 0), InvalidInputError);
    ContinuousFn broken = f;
    broken.lipschitz = 0.0;
    CHECK_THROWS_AS(rescale(broken), InvalidInputError);
}

#include "levelcross/invariant_suite.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>

#include "levelcross/builtin_functions.hpp"
#include "levelcross/clustered_coloring.hpp"
#include "levelcross/constants_lab.hpp"
#include "levelcross/continuous_solver.hpp"
#include "levelcross/discrete_solver.hpp"
#include "levelcross/generators.hpp"
#include "levelcross/io.hpp"
#include "levelcross/steinhaus.hpp"
#include "levelcross/witness_verify.hpp"

namespace levelcross {

namespace {

using Check = std::function<bool()>;

LatticePoint random_point(std::mt19937_64& rng, int d, std::int64_t radius) {
    LatticePoint p;
    p.coords.resize(d);
    const std::uint64_t span = static_cast<std::uint64_t>(2 * radius + 1);
    for (int s = 0; s < d; ++s) {
        p.coords[s] = static_cast<std::int64_t>(rng() % span) - radius;
    }
    return p;
}

bool lattice_checks() {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 4);
        const LatticePoint a = random_point(rng, d, 40);
        const LatticePoint b = random_point(rng, d, 40);
        const LatticePoint c = random_point(rng, d, 40);
        if (linf_distance(a, b) != linf_distance(b, a)) return false;
        if ((linf_distance(a, b) == 0) != (a == b)) return false;
        if (linf_distance(a, c) > linf_distance(a, b) + linf_distance(b, c)) return false;
    }
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        std::vector<LatticePoint> pts;
        const int count = 1 + static_cast<int>(rng() % 120);
        for (int i = 0; i < count; ++i) pts.push_back(random_point(rng, d, 6));
        const LatticeSet s = LatticeSet::from_points(pts);
        const auto parts = one_connected_components(s);
        std::size_t total = 0;
        for (const auto& part : parts) total += part.size();
        if (total != s.size()) return false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                std::int64_t best = std::numeric_limits<std::int64_t>::max();
                for (const auto& p : parts[i].points()) {
                    for (const auto& q : parts[j].points()) {
                        best = std::min(best, linf_distance(p, q));
                    }
                }
                if (best < 2) return false;  // parts this close must have merged
            }
        }
    }
    return true;
}

bool coloring_checks() {
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const ColoringParams params(n, m);
            std::mt19937_64 rng(static_cast<std::uint64_t>(100 * n + m));
            for (int trial = 0; trial < 400; ++trial) {
                const LatticePoint t = random_point(rng, n, 60);
                const Decode dec = decode(t, params);  // throws on any exactness failure
                for (int i = 1; i <= n; ++i) {
                    if (dec.v.coords[i - 1] < 1 || dec.v.coords[i - 1] > i * m) return false;
                }
                if (color(t, params) != dec.k + 1) return false;
                if (!(cluster_of(t, params) == dec.cluster())) return false;
                if (!enumerate_cluster(dec.cluster(), params).contains(t)) return false;
            }
            const LatticeSet cluster = enumerate_cluster(ClusterId{0, random_point(rng, n, 2)}, params);
            if (static_cast<std::int64_t>(cluster.size()) != cluster_size(params)) return false;
            if (!is_one_connected(cluster)) return false;
        }
    }
    return true;
}

bool grid_checks() {
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t k = 1; k <= 3; ++k) {
            const GridShape shape(n, k);
            const std::int64_t cells = shape.cell_count();
            for (std::int64_t a = 0; a < cells; ++a) {
                for (std::int64_t b = 0; b < cells; ++b) {
                    const CellIndex ca = cell_at(a, shape), cb = cell_at(b, shape);
                    const int dim = intersection_dim(ca, cb, shape);
                    if (dim != intersection_dim(cb, ca, shape)) return false;
                    // geometric oracle on the exact rational boxes
                    const RationalBox ba = cube_bounds(ca, shape), bb = cube_bounds(cb, shape);
                    int geo = 0;
                    bool empty = false;
                    for (int s = 0; s < n; ++s) {
                        const std::int64_t lo = std::max(ba.lo_num[s], bb.lo_num[s]);
                        const std::int64_t hi = std::min(ba.hi_num[s], bb.hi_num[s]);
                        if (lo > hi) empty = true;
                        else if (lo < hi) ++geo;
                    }
                    if ((empty ? -1 : geo) != dim) return false;
                }
                if (intersection_dim(cell_at(a, shape), cell_at(a, shape), shape) != n) return false;
            }
        }
    }
    return true;
}

bool steinhaus_checks() {
    for (int n = 2; n <= 3; ++n) {
        for (std::int64_t k = 2; k <= 5; ++k) {
            for (int trial = 0; trial < 50; ++trial) {
                const auto coloring = random_coloring(
                    GridShape(n, k), n, static_cast<std::uint64_t>(n * 1000 + k * 10 + trial));
                const ChessboardWitness w = find_crossing(coloring);
                if (!verify_chessboard_witness(coloring, w)) return false;
            }
        }
    }
    return true;
}

bool discrete_checks() {
    const std::pair<int, int> configs[] = {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};
    for (const auto& [n, m] : configs) {
        const GridShape shape(n, n == 2 ? 6 : 4);
        for (int trial = 0; trial < 25; ++trial) {
            const std::uint64_t seed = static_cast<std::uint64_t>(n * 7919 + m * 131 + trial);
            const CellLabeling f = trial % 2 == 0 ? random_valid_labeling_walk(shape, m, seed)
                                                  : random_valid_labeling_poly(shape, m, seed);
            if (!validate_condition(f, m).empty()) return false;
            const DiscreteWitness w = solve(f, m);
            if (!verify_discrete_witness(f, w)) return false;
            // accepted at m forces the coarse (m+1)-bound on every adjacency
            const int d = f.value_dim();
            const std::int64_t cells = shape.cell_count();
            for (std::int64_t a = 0; a < cells; ++a) {
                for (std::int64_t b = a + 1; b < cells; ++b) {
                    if (intersection_dim(cell_at(a, shape), cell_at(b, shape), shape) < 0) continue;
                    std::int64_t dist = 0;
                    for (int s = 0; s < d; ++s) {
                        dist = std::max(dist, std::abs(f.flat()[a * d + s] - f.flat()[b * d + s]));
                    }
                    if (dist > m + 1) return false;
                }
            }
        }
    }
    return true;
}

bool continuous_checks() {
    for (const char* name : {"proj", "linear"}) {
        const ContinuousFn f = builtin_function(name);
        const ContinuousWitness w = approximate_level_crossing(f, 0.1);
        if (!verify_continuous_witness(f, w)) return false;
    }
    // freshly discretized labelings satisfy the m = 0 hypothesis
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        ContinuousFn f;
        f.n = 2;
        const double a = static_cast<double>(rng() % 200) / 100.0 - 1.0;
        const double b = static_cast<double>(rng() % 200) / 100.0 - 1.0;
        f.lipschitz = std::abs(a) + std::abs(b) + 0.1;
        f.bound = std::abs(a) + std::abs(b) + 0.1;
        f.eval = [a, b](std::span<const double> x, std::span<double> out) {
            out[0] = a * x[0] + b * x[1] * x[1];
        };
        const CellLabeling labels = discretize(rescale(f), 8);
        if (!validate_condition(labels, 0).empty()) return false;
    }
    const std::vector<std::vector<double>> pts = {{0.0, 0.0}, {1.0, 0.0}};
    if (hausdorff_distance(pts, pts) != 0.0) return false;
    return true;
}

bool constants_checks() {
    const auto report = exhaustive_check_c1(2, 1, 1);
    if (!report.all_passed || report.enumerated == 0) return false;
    const CellLabeling f = build_prop53_witness();
    for (int m = 0; m <= 2; ++m) {
        if (!validate_condition(f, m).empty()) return false;
    }
    if (singleton_sufficient(f).has_value()) return false;
    const DiscreteWitness w = solve(f, 0);
    return verify_discrete_witness(f, w) && w.value_set.size() == 2;
}

bool io_checks() {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
        const int d = static_cast<int>(rng() % 3);
        CellLabeling l(GridShape(n, k), d);
        auto flat = l.flat_mutable();
        for (auto& v : flat) v = static_cast<std::int64_t>(rng() % 19) - 9;
        const std::string text = serialize_labeling(l);
        const CellLabeling back = parse_labeling(text);
        if (!(back == l) || serialize_labeling(back) != text) return false;
    }
    return true;
}

}  // namespace

bool run_invariant_suite(std::ostream& out) {
    const std::pair<const char*, Check> suites[] = {
        {"lattice metric and components", lattice_checks},
        {"clustered coloring decode/partition", coloring_checks},
        {"grid intersection vs geometric oracle", grid_checks},
        {"chessboard crossing totality", steinhaus_checks},
        {"discrete solver witnesses", discrete_checks},
        {"continuous pipeline soundness", continuous_checks},
        {"constants lab", constants_checks},
        {"labeling serialization round-trip", io_checks},
    };
    bool all = true;
    for (const auto& [name, check] : suites) {
        bool ok = false;
        std::string error;
        try {
            ok = check();
        } catch (const std::exception& e) {
            error = e.what();
        }
        out << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!error.empty()) out << "  (" << error << ")";
        out << "\n";
        all = all && ok;
    }
    return all;
}

}  // namespace levelcross

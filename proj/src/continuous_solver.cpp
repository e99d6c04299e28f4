#include "levelcross/continuous_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <unordered_set>

#include "levelcross/witness_verify.hpp"

namespace levelcross {

namespace {

std::int64_t checked_factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > std::numeric_limits<std::int64_t>::max() / i) {
            throw InvalidInputError("factorial overflow");
        }
        f *= i;
    }
    return f;
}

// Best known bound on |P| at m = 0, used to pick the target-space resolution.
std::int64_t value_set_bound(int n) {
    if (n == 2) return 1;
    if (n == 3) return 2;
    return checked_factorial(n - 1);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

std::vector<double> RescaledFn::map_back_point(std::span<const double> p0) const {
    std::vector<double> p(p0.size());
    for (std::size_t s = 0; s < p0.size(); ++s) p[s] = scale * (p0[s] - 0.5);
    return p;
}

RescaledFn rescale(const ContinuousFn& f) {
    if (f.n < 1) throw InvalidInputError("rescale: need n >= 1");
    if (!(f.bound > 0) || !(f.lipschitz > 0)) {
        throw InvalidInputError("rescale: declared constants must be positive");
    }
    const double scale = 2.0 * f.bound;
    const int d = f.n - 1;
    RescaledFn r;
    r.scale = scale;
    r.fn.n = f.n;
    r.fn.lipschitz = f.lipschitz / scale;
    r.fn.bound = 1.0;
    r.fn.eval = [inner = f.eval, scale, d](std::span<const double> x, std::span<double> out) {
        inner(x, out);
        for (int s = 0; s < d; ++s) out[s] = out[s] / scale + 0.5;
    };
    return r;
}

std::int64_t choose_resolution(int n, double epsilon0) {
    if (n < 2) throw InvalidInputError("choose_resolution: need n >= 2");
    if (!(epsilon0 > 0)) throw InvalidInputError("choose_resolution: need epsilon0 > 0");
    const double c = static_cast<double>(value_set_bound(n));
    const double numer = 3.0 * std::sqrt(static_cast<double>(n - 1)) * c;
    const double q = numer / (2.0 * epsilon0);
    if (q > 1e15) throw InvalidInputError("choose_resolution: epsilon too small");
    std::int64_t k = static_cast<std::int64_t>(std::floor(q)) + 1;
    if (k < 1) k = 1;
    while (numer / (2.0 * static_cast<double>(k)) >= epsilon0) ++k;  // strict inequality
    return k;
}

CellLabeling discretize(const RescaledFn& f0, std::int64_t k) {
    const ContinuousFn& fn = f0.fn;
    const int n = fn.n;
    const int d = n - 1;
    if (k < 1) throw InvalidInputError("discretize: need k >= 1");
    const double l0 = fn.lipschitz;
    if (!(l0 > 0)) throw InvalidInputError("discretize: nonpositive Lipschitz constant");

    std::int64_t m = static_cast<std::int64_t>(std::ceil(4.0 * static_cast<double>(k) * l0));
    if (m < 1) m = 1;
    while (l0 / static_cast<double>(m) > 1.0 / (4.0 * static_cast<double>(k))) ++m;

    GridShape grid(n, m);
    if (grid.cell_count() > (std::int64_t{1} << 28)) {
        throw InvalidInputError("discretize: evaluation grid too large (" +
                                std::to_string(grid.cell_count()) + " cells)");
    }
    CellLabeling out(grid, d);
    auto flat = out.flat_mutable();

    std::vector<double> x(n), y(d);
    std::vector<std::int32_t> idx(n, 1);
    std::int64_t lin = 0;
    do {
        for (int s = 0; s < n; ++s) {
            x[s] = (static_cast<double>(idx[s]) - 0.5) / static_cast<double>(m);
        }
        fn.eval(x, y);
        for (int s = 0; s < d; ++s) {
            const double clamped = std::clamp(y[s], 0.0, 1.0);
            std::int64_t j = static_cast<std::int64_t>(std::floor(clamped * static_cast<double>(k))) + 1;
            flat[lin * d + s] = std::clamp<std::int64_t>(j, 1, k);
        }
        ++lin;
    } while (detail::advance_index(idx, m));
    return out;
}

ContinuousWitness approximate_level_crossing(const ContinuousFn& f, double epsilon) {
    if (!(epsilon > 0)) throw InvalidInputError("approximate_level_crossing: need epsilon > 0");
    if (f.n < 1) throw InvalidInputError("approximate_level_crossing: need n >= 1");

    ContinuousWitness w;
    w.epsilon = epsilon;
    if (f.n == 1) {
        // f maps into R^0, so every point is a level point; the whole
        // interval is the witness.
        w.grid = GridShape(1, 1);
        w.cells = {CellIndex{1}};
        w.axis = 1;
        return w;
    }

    const RescaledFn f0 = rescale(f);
    const double eps0 = epsilon / f0.scale;
    const std::int64_t k = choose_resolution(f.n, eps0);
    CellLabeling labels = discretize(f0, k);
    DiscreteWitness dw = solve(labels, 0);

    const LatticePoint& phat = dw.value_set.points().front();
    std::vector<double> p0(static_cast<std::size_t>(f.n - 1));
    for (int s = 0; s < f.n - 1; ++s) {
        // Center of the enlarged cube of phat; enlargement is symmetric so
        // this is the plain cube center, and phat may lie outside [1, k].
        p0[s] = (static_cast<double>(phat.coords[s]) - 0.5) / static_cast<double>(k);
    }
    w.p = f0.map_back_point(p0);
    w.grid = labels.shape();
    w.cells = std::move(dw.cells);
    w.axis = dw.axis;
    return w;
}

namespace {

// Corner + center sampling of a cell union, deduplicated over the half-grid
// lattice (denominator 2m).
std::vector<std::vector<double>> sample_cell_union(const std::vector<CellIndex>& cells,
                                                   const GridShape& grid) {
    const int n = grid.n;
    const std::int64_t two_m = 2 * grid.k;
    std::unordered_set<std::uint64_t> seen;
    const int bits = 64 / std::max(1, n);
    const bool packable = two_m < (std::int64_t{1} << bits) - 1;

    std::vector<std::vector<double>> out;
    std::vector<std::int64_t> num(n);
    for (const auto& c : cells) {
        // Numerators over 2m: corners at 2(i-1) and 2i, center at 2i-1.
        std::vector<std::int32_t> pick(n, 0);
        while (true) {
            for (int s = 0; s < n; ++s) num[s] = 2 * (c.i[s] - 1) + pick[s];
            bool fresh = true;
            if (packable) {
                std::uint64_t key = 0;
                for (int s = 0; s < n; ++s) {
                    key = (key << bits) | static_cast<std::uint64_t>(num[s]);
                }
                fresh = seen.insert(key).second;
            }
            if (fresh) {
                std::vector<double> pt(n);
                for (int s = 0; s < n; ++s) {
                    pt[s] = static_cast<double>(num[s]) / static_cast<double>(two_m);
                }
                out.push_back(std::move(pt));
            }
            int s = n - 1;
            while (s >= 0 && pick[s] == 2) pick[s--] = 0;
            if (s < 0) break;
            ++pick[s];
        }
    }
    return out;
}

// Exact closed-box overlap test between two cell unions on different grids.
bool cell_unions_intersect(const std::vector<CellIndex>& a, const GridShape& ga,
                           const std::vector<CellIndex>& b, const GridShape& gb) {
    if (ga.n != gb.n) return false;
    const int n = ga.n;
    std::unordered_set<std::int64_t> a_lin;
    a_lin.reserve(a.size() * 2);
    for (const auto& c : a) a_lin.insert(linear_index(c, ga));

    std::vector<std::int64_t> lo(n), hi(n), cur(n);
    for (const auto& c : b) {
        // a-cells whose closed box meets the closed box of c: index ranges
        // from (q-1)/ka <= i/kb and q/ka >= (i-1)/kb per axis.
        for (int s = 0; s < n; ++s) {
            const std::int64_t i = c.i[s];
            lo[s] = std::max<std::int64_t>(1, ceil_div((i - 1) * ga.k, gb.k));
            hi[s] = std::min<std::int64_t>(ga.k, (i * ga.k) / gb.k + 1);
            if (lo[s] > hi[s]) goto next_cell;
        }
        cur = lo;
        while (true) {
            std::int64_t lin = 0;
            for (int s = 0; s < n; ++s) lin = lin * ga.k + (cur[s] - 1);
            if (a_lin.contains(lin)) return true;
            int s = n - 1;
            while (s >= 0 && cur[s] == hi[s]) {
                cur[s] = lo[s];
                --s;
            }
            if (s < 0) break;
            ++cur[s];
        }
    next_cell:;
    }
    return false;
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
    double sq = 0;
    for (std::size_t s = 0; s < a.size(); ++s) sq += (a[s] - b[s]) * (a[s] - b[s]);
    return std::sqrt(sq);
}

}  // namespace

double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b) {
    if (a.empty() || b.empty()) throw InvalidInputError("hausdorff_distance: empty input");
    const std::size_t dim = a.front().size();
    for (const auto& p : a) {
        if (p.size() != dim) throw InvalidInputError("hausdorff_distance: dimension mismatch");
    }
    for (const auto& p : b) {
        if (p.size() != dim) throw InvalidInputError("hausdorff_distance: dimension mismatch");
    }

    const auto directed = [dim](const std::vector<std::vector<double>>& from,
                                const std::vector<std::vector<double>>& to, double running) {
        double worst = running;
        for (const auto& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : to) {
                best = std::min(best, l2_distance(p, q));
                if (best <= worst) break;  // cannot raise the max
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return directed(b, a, directed(a, b, 0.0));
}

RefineResult refine_sequence(const ContinuousFn& f, double epsilon_start, int steps) {
    if (steps < 1) throw InvalidInputError("refine_sequence: need steps >= 1");
    RefineResult res;
    double eps = epsilon_start;
    for (int j = 0; j < steps; ++j, eps /= 2.0) {
        res.witnesses.push_back(approximate_level_crossing(f, eps));
    }

    // Majority vote over the axes each witness family actually crosses; a
    // witness keeps its own axis when it cannot support the winner.
    std::vector<std::vector<int>> axes(res.witnesses.size());
    std::vector<int> votes(static_cast<std::size_t>(f.n) + 1, 0);
    for (std::size_t j = 0; j < res.witnesses.size(); ++j) {
        axes[j] = crossing_axes(res.witnesses[j].cells, res.witnesses[j].grid);
        for (int a : axes[j]) ++votes[static_cast<std::size_t>(a)];
    }
    int majority = 1;
    for (int a = 1; a <= f.n; ++a) {
        if (votes[static_cast<std::size_t>(a)] > votes[static_cast<std::size_t>(majority)]) {
            majority = a;
        }
    }
    for (std::size_t j = 0; j < res.witnesses.size(); ++j) {
        if (std::find(axes[j].begin(), axes[j].end(), majority) != axes[j].end()) {
            res.witnesses[j].axis = majority;
        }
    }

    for (std::size_t j = 0; j + 1 < res.witnesses.size(); ++j) {
        const auto& wa = res.witnesses[j];
        const auto& wb = res.witnesses[j + 1];
        RefineStepDiag diag;
        diag.p_drift = wa.p.empty() ? 0.0 : l2_distance(wa.p, wb.p);
        diag.hausdorff = hausdorff_distance(sample_cell_union(wa.cells, wa.grid),
                                            sample_cell_union(wb.cells, wb.grid));
        diag.unions_intersect = cell_unions_intersect(wa.cells, wa.grid, wb.cells, wb.grid);
        res.diagnostics.push_back(diag);
    }
    return res;
}

ContinuousFn make_distance_coloring_fn(const CellLabeling& coloring) {
    const GridShape shape = coloring.shape();
    const int n = shape.n;
    const std::int64_t k = shape.k;
    if (n < 2) throw InvalidInputError("distance fields need n >= 2");

    // Per (containing coarse cell, color j < n): candidate color-j cells
    // sorted by the index lower bound max(|gap|-1, 0)/k on their distance,
    // so queries can stop scanning early.
    struct Candidate {
        std::int32_t lb_num;                // lower bound numerator over k
        std::vector<std::int32_t> idx;
    };
    const std::int64_t cells = shape.cell_count();
    const int fields = n - 1;
    auto table = std::make_shared<std::vector<std::vector<Candidate>>>(
        static_cast<std::size_t>(cells * fields));

    std::vector<std::vector<CellIndex>> by_color(static_cast<std::size_t>(fields) + 1);
    for (std::int64_t lin = 0; lin < cells; ++lin) {
        const std::int64_t color = coloring.value(lin)[0];
        if (color < 1 || color > n) throw InvalidInputError("coloring value outside 1..n");
        if (color <= fields) {
            by_color[static_cast<std::size_t>(color)].push_back(cell_at(lin, shape));
        }
    }
    for (std::int64_t home = 0; home < cells; ++home) {
        const CellIndex h = cell_at(home, shape);
        for (int j = 1; j <= fields; ++j) {
            auto& list = (*table)[static_cast<std::size_t>(home * fields + (j - 1))];
            for (const auto& c : by_color[static_cast<std::size_t>(j)]) {
                std::int32_t lb = 0;
                for (int s = 0; s < n; ++s) {
                    const std::int32_t gap = std::abs(h.i[s] - c.i[s]);
                    lb = std::max(lb, gap > 0 ? gap - 1 : 0);
                }
                list.push_back(Candidate{lb, c.i});
            }
            std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) {
                return std::tie(a.lb_num, a.idx) < std::tie(b.lb_num, b.idx);
            });
        }
    }

    ContinuousFn f;
    f.n = n;
    f.lipschitz = 1.0;  // each coordinate is an l-infinity distance field
    f.bound = 1.0;
    f.eval = [table, shape, n, k, fields](std::span<const double> x, std::span<double> out) {
        std::int64_t home = 0;
        for (int s = 0; s < n; ++s) {
            const auto i = std::clamp<std::int64_t>(
                static_cast<std::int64_t>(std::floor(x[s] * static_cast<double>(k))) + 1, 1, k);
            home = home * k + (i - 1);
        }
        for (int j = 0; j < fields; ++j) {
            const auto& list = (*table)[static_cast<std::size_t>(home * fields + j)];
            double best = 1.0;  // empty color class: constant positive field
            for (const auto& cand : list) {
                if (static_cast<double>(cand.lb_num) / static_cast<double>(k) >= best) break;
                double dist = 0;
                for (int s = 0; s < n; ++s) {
                    const double lo = static_cast<double>(cand.idx[s] - 1) / static_cast<double>(k);
                    const double hi = static_cast<double>(cand.idx[s]) / static_cast<double>(k);
                    dist = std::max({dist, lo - x[s], x[s] - hi});
                }
                best = std::min(best, dist);
                if (best == 0.0) break;
            }
            out[j] = best;
        }
    };
    return f;
}

namespace {

// Snaps a fine crossing band to a single-color coarse family. Candidate
// colors are ranked by how close the band's level point p sits to each
// color's zero set; for each color, cells meeting the band are tried first,
// then cells within 2*epsilon of it.
std::optional<ChessboardWitness> snap_band_to_color(const CellLabeling& coloring,
                                                    const ContinuousWitness& w, double eps) {
    const GridShape coarse = coloring.shape();
    const GridShape fine = w.grid;
    const int n = coarse.n;
    const std::int64_t k = coarse.k;
    const std::int64_t m = fine.k;
    const std::int64_t coarse_cells = coarse.cell_count();

    std::vector<std::uint8_t> overlaps(static_cast<std::size_t>(coarse_cells), 0);
    std::vector<std::uint8_t> near(static_cast<std::size_t>(coarse_cells), 0);
    std::vector<std::int64_t> lo(n), hi(n), cur(n);
    const auto mark = [&](std::vector<std::uint8_t>& flags) {
        cur = lo;
        while (true) {
            std::int64_t lin = 0;
            for (int s = 0; s < n; ++s) lin = lin * k + (cur[s] - 1);
            flags[static_cast<std::size_t>(lin)] = 1;
            int s = n - 1;
            while (s >= 0 && cur[s] == hi[s]) {
                cur[s] = lo[s];
                --s;
            }
            if (s < 0) return;
            ++cur[s];
        }
    };
    for (const auto& c : w.cells) {
        bool ok = true;
        for (int s = 0; s < n; ++s) {
            lo[s] = std::max<std::int64_t>(1, ceil_div((c.i[s] - 1) * k, m));
            hi[s] = std::min<std::int64_t>(k, (c.i[s] * k) / m + 1);
            if (lo[s] > hi[s]) ok = false;
        }
        if (ok) mark(overlaps);
        for (int s = 0; s < n; ++s) {
            const double flo = static_cast<double>(c.i[s] - 1) / static_cast<double>(m) - 2 * eps;
            const double fhi = static_cast<double>(c.i[s]) / static_cast<double>(m) + 2 * eps;
            lo[s] = std::clamp<std::int64_t>(
                static_cast<std::int64_t>(std::ceil(flo * static_cast<double>(k) - 1e-9)), 1, k);
            hi[s] = std::clamp<std::int64_t>(
                static_cast<std::int64_t>(std::floor(fhi * static_cast<double>(k) + 1e-9)) + 1, 1, k);
        }
        mark(near);
    }

    std::vector<std::int64_t> candidates;
    {
        std::vector<std::pair<double, std::int64_t>> scored;
        double pmin = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= n - 1; ++j) {
            scored.emplace_back(w.p[static_cast<std::size_t>(j - 1)], j);
            pmin = std::min(pmin, scored.back().first);
        }
        std::sort(scored.begin(), scored.end());
        if (pmin >= eps) candidates.push_back(n);  // band provably avoids all zero sets
        for (const auto& [score, j] : scored) candidates.push_back(j);
        if (pmin < eps) candidates.push_back(n);
    }

    for (std::int64_t color : candidates) {
        for (const auto* flags : {&overlaps, &near}) {
            std::vector<CellIndex> selected;
            for (std::int64_t lin = 0; lin < coarse_cells; ++lin) {
                if ((*flags)[static_cast<std::size_t>(lin)] && coloring.value(lin)[0] == color) {
                    selected.push_back(cell_at(lin, coarse));
                }
            }
            if (selected.empty()) continue;
            for (const auto& comp : components_min_dim(selected, 0, coarse)) {
                const auto axes = crossing_axes(comp, coarse);
                if (!axes.empty()) {
                    ChessboardWitness cw;
                    cw.color = color;
                    cw.cells = comp;
                    cw.axis = axes.front();
                    return cw;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ChessboardWitness chessboard_via_distance_fields(const CellLabeling& coloring) {
    const GridShape shape = coloring.shape();
    const std::int64_t k = shape.k;

    // Direct combinatorial answer, used as the color-existence cross-check.
    const ChessboardWitness reference = find_crossing(coloring);
    if (shape.n == 1) return reference;

    const ContinuousFn f = make_distance_coloring_fn(coloring);
    double eps = shape.n == 2 ? 1.0 / (8.0 * static_cast<double>(k))
                              : 1.0 / (2.0 * static_cast<double>(k));
    for (int attempt = 0; attempt < 4; ++attempt, eps /= 2.0) {
        const ContinuousWitness w = approximate_level_crossing(f, eps);
        auto snapped = snap_band_to_color(coloring, w, eps);
        if (!snapped) continue;
        if (!verify_chessboard_witness(coloring, *snapped)) continue;
        detail::internal_check(!reference.cells.empty() && !snapped->cells.empty(),
                               "distance-field chessboard: crossing existence mismatch");
        return *snapped;
    }
    throw TheoremViolationError(
        "chessboard_via_distance_fields: no verifiable snap at any refinement level");
}

}  // namespace levelcross

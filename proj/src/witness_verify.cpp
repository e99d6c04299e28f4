#include "levelcross/witness_verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

namespace levelcross {

namespace {

// Local adjacency helpers: the verifiers deliberately avoid the solvers'
// union-find machinery.

bool cells_sorted_unique_in_shape(const std::vector<CellIndex>& cells, const GridShape& shape,
                                  std::string& why) {
    if (cells.empty()) {
        why = "empty cell family";
        return false;
    }
    for (const auto& c : cells) {
        if (!cell_in_shape(c, shape)) {
            why = "cell outside the grid";
            return false;
        }
    }
    if (!std::is_sorted(cells.begin(), cells.end())) {
        why = "cells not sorted";
        return false;
    }
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
        why = "duplicate cells";
        return false;
    }
    return true;
}

// Flood fill over the family only, finding neighbors by binary search on
// the sorted cell list rather than the solvers' union-find.
bool one_component_flood(const std::vector<CellIndex>& cells) {
    const int n = static_cast<int>(cells.front().i.size());
    std::vector<char> seen(cells.size(), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    CellIndex probe;
    probe.i.resize(n);
    std::vector<std::int32_t> off(n, -1);
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        std::fill(off.begin(), off.end(), -1);
        while (true) {
            bool zero = true;
            for (int s = 0; s < n; ++s) {
                probe.i[s] = cells[at].i[s] + off[s];
                if (off[s] != 0) zero = false;
            }
            if (!zero) {
                const auto it = std::lower_bound(cells.begin(), cells.end(), probe);
                if (it != cells.end() && *it == probe) {
                    const std::size_t other = static_cast<std::size_t>(it - cells.begin());
                    if (!seen[other]) {
                        seen[other] = 1;
                        ++reached;
                        queue.push_back(other);
                    }
                }
            }
            int s = n - 1;
            while (s >= 0 && off[s] == 1) off[s--] = -1;
            if (s < 0) break;
            ++off[s];
        }
    }
    return reached == cells.size();
}

bool touches_both_faces(const std::vector<CellIndex>& cells, const GridShape& shape, int axis) {
    if (axis < 1 || axis > shape.n) return false;
    bool low = false, high = false;
    for (const auto& c : cells) {
        if (c.i[axis - 1] == 1) low = true;
        if (c.i[axis - 1] == shape.k) high = true;
    }
    return low && high;
}

}  // namespace

VerifyResult verify_chessboard_witness(const CellLabeling& coloring, const ChessboardWitness& w) {
    const GridShape& shape = coloring.shape();
    std::string why;
    if (!cells_sorted_unique_in_shape(w.cells, shape, why)) return VerifyResult::fail(why);
    if (w.color < 1 || w.color > shape.n) return VerifyResult::fail("color outside 1..n");
    for (const auto& c : w.cells) {
        if (coloring.value(c)[0] != w.color) {
            return VerifyResult::fail("family is not monochromatic");
        }
    }
    if (!one_component_flood(w.cells)) return VerifyResult::fail("family is not one component");
    if (!touches_both_faces(w.cells, shape, w.axis)) {
        return VerifyResult::fail("family misses a face of the reported axis");
    }
    if (static_cast<std::int64_t>(w.cells.size()) < shape.k) {
        return VerifyResult::fail("crossing family smaller than k");
    }
    return {};
}

VerifyResult verify_discrete_witness(const CellLabeling& f, const DiscreteWitness& w,
                                     bool check_bound) {
    const GridShape& shape = f.shape();
    std::string why;
    if (!cells_sorted_unique_in_shape(w.cells, shape, why)) return VerifyResult::fail(why);
    if (w.value_set.empty()) return VerifyResult::fail("empty value set");
    if (w.value_set.dim() != shape.n - 1) return VerifyResult::fail("value set dimension != n-1");

    // 1-connectivity of P by direct pairwise flood fill.
    const auto& pts = w.value_set.points();
    {
        std::vector<char> seen(pts.size(), 0);
        std::deque<std::size_t> queue{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const std::size_t at = queue.front();
            queue.pop_front();
            for (std::size_t other = 0; other < pts.size(); ++other) {
                if (!seen[other] && linf_distance(pts[at], pts[other]) <= 1) {
                    seen[other] = 1;
                    ++reached;
                    queue.push_back(other);
                }
            }
        }
        if (reached != pts.size()) return VerifyResult::fail("value set P is not 1-connected");
    }
    if (check_bound && static_cast<std::int64_t>(w.value_set.size()) > w.bound) {
        return VerifyResult::fail("|P| exceeds the bound");
    }
    for (const auto& c : w.cells) {
        if (!w.value_set.contains(f.value_point(c))) {
            return VerifyResult::fail("a family value lies outside P");
        }
    }
    if (!one_component_flood(w.cells)) return VerifyResult::fail("family is not one component");
    if (!touches_both_faces(w.cells, shape, w.axis)) {
        return VerifyResult::fail("family misses a face of the reported axis");
    }
    if (static_cast<std::int64_t>(w.cells.size()) < shape.k) {
        return VerifyResult::fail("crossing family smaller than k");
    }
    return {};
}

VerifyResult verify_continuous_witness(const ContinuousFn& f, const ContinuousWitness& w) {
    const GridShape& grid = w.grid;
    if (grid.n != f.n) return VerifyResult::fail("grid dimension != function dimension");
    std::string why;
    if (!cells_sorted_unique_in_shape(w.cells, grid, why)) return VerifyResult::fail(why);
    if (!one_component_flood(w.cells)) return VerifyResult::fail("family is not one component");
    if (!touches_both_faces(w.cells, grid, w.axis)) {
        return VerifyResult::fail("family misses a face of the reported axis");
    }
    if (static_cast<std::int64_t>(w.cells.size()) < grid.k) {
        return VerifyResult::fail("crossing family smaller than k");
    }
    if (!(w.epsilon > 0)) return VerifyResult::fail("epsilon must be positive");

    const int n = grid.n;
    const int d = n - 1;
    if (static_cast<int>(w.p.size()) != d) return VerifyResult::fail("level point has wrong dimension");
    if (d == 0) return {};  // R^0: the sup is identically zero

    // Dyadic-refinement sampling: the 3^n lattice of each cell over the
    // half-grid, deduplicated; every point of the union is within h/4 of a
    // sample in l-infinity.
    const std::int64_t m = grid.k;
    const std::int64_t two_m = 2 * m;
    const int bits = 64 / std::max(1, n);
    const bool packable = two_m < (std::int64_t{1} << bits) - 1;
    std::unordered_set<std::uint64_t> seen;

    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(d));
    double worst = 0;
    std::vector<std::int64_t> num(static_cast<std::size_t>(n));
    for (const auto& c : w.cells) {
        std::vector<std::int32_t> pick(static_cast<std::size_t>(n), 0);
        while (true) {
            for (int s = 0; s < n; ++s) num[s] = 2 * (c.i[s] - 1) + pick[s];
            bool fresh = true;
            if (packable) {
                std::uint64_t key = 0;
                for (int s = 0; s < n; ++s) key = (key << bits) | static_cast<std::uint64_t>(num[s]);
                fresh = seen.insert(key).second;
            }
            if (fresh) {
                for (int s = 0; s < n; ++s) {
                    x[s] = static_cast<double>(num[s]) / static_cast<double>(two_m);
                }
                f.eval(x, y);
                double sq = 0;
                for (int s = 0; s < d; ++s) sq += (y[s] - w.p[s]) * (y[s] - w.p[s]);
                worst = std::max(worst, std::sqrt(sq));
            }
            int s = n - 1;
            while (s >= 0 && pick[s] == 2) pick[s--] = 0;
            if (s < 0) break;
            ++pick[s];
        }
    }

    const double h = 1.0 / static_cast<double>(m);
    const double slack = std::max(f.lipschitz * h / 2.0,
                                  std::sqrt(static_cast<double>(d)) * f.lipschitz * h / 4.0);
    if (!(worst + slack < w.epsilon)) {
        return VerifyResult::fail("certified sup bound " + std::to_string(worst + slack) +
                                  " is not below epsilon " + std::to_string(w.epsilon));
    }
    return {};
}

}  // namespace levelcross

#include "levelcross/discrete_solver.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace levelcross {

namespace {

void check_params(const CellLabeling& f, int m) {
    const int n = f.shape().n;
    if (f.value_dim() != n - 1) {
        throw InvalidInputError("labeling values must have dimension n-1");
    }
    if (m < 0 || m > n - 1) throw InvalidInputError("need 0 <= m <= n-1");
}

}  // namespace

std::vector<std::pair<CellIndex, CellIndex>> validate_condition(const CellLabeling& f, int m) {
    check_params(f, m);
    const GridShape& shape = f.shape();
    const int n = shape.n;
    const std::int64_t k = shape.k;
    const int d = f.value_dim();

    // Offsets with >= m zero entries and lexicographically positive, so each
    // unordered pair is generated once as (a, b) with a < b. Iteration order
    // (cells ascending, offsets ascending) makes the output sorted.
    std::vector<std::vector<std::int32_t>> offsets;
    std::vector<std::int64_t> deltas;
    std::vector<std::int64_t> stride(n);
    stride[n - 1] = 1;
    for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * k;
    for (const auto& off : detail::neighbor_offsets(n, m)) {
        int first_nonzero = 0;
        while (off[first_nonzero] == 0) ++first_nonzero;
        if (off[first_nonzero] < 0) continue;
        std::int64_t delta = 0;
        for (int s = 0; s < n; ++s) delta += static_cast<std::int64_t>(off[s]) * stride[s];
        offsets.push_back(off);
        deltas.push_back(delta);
    }

    std::vector<std::pair<CellIndex, CellIndex>> violations;
    const auto flat = f.flat();
    std::vector<std::int32_t> idx(n, 1);
    std::int64_t lin = 0;
    do {
        for (std::size_t o = 0; o < offsets.size(); ++o) {
            bool ok = true;
            for (int s = 0; s < n; ++s) {
                const std::int32_t v = idx[s] + offsets[o][s];
                if (v < 1 || v > k) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            const std::int64_t other = lin + deltas[o];
            std::int64_t dist = 0;
            for (int s = 0; s < d; ++s) {
                const std::int64_t gap = flat[lin * d + s] - flat[other * d + s];
                dist = std::max(dist, gap < 0 ? -gap : gap);
            }
            if (dist > 1) {
                CellIndex b;
                b.i.resize(n);
                for (int s = 0; s < n; ++s) b.i[s] = idx[s] + offsets[o][s];
                violations.emplace_back(CellIndex{std::vector<std::int32_t>(idx)}, std::move(b));
            }
        }
        ++lin;
    } while (detail::advance_index(idx, k));
    return violations;
}

namespace detail {

LatticeSet connect_within(const LatticeSet& universe, const LatticeSet& target) {
    std::vector<LatticeSet> comps = one_connected_components(target);
    std::vector<LatticePoint> current(target.points());
    const auto& all = universe.points();

    while (comps.size() > 1) {
        // Multi-source BFS inside the universe from the first component until
        // any point of another component is reached; sorted adjacency keeps
        // the chosen path deterministic.
        std::map<LatticePoint, LatticePoint> parent;
        std::deque<LatticePoint> queue;
        for (const auto& p : comps.front().points()) {
            parent.emplace(p, p);
            queue.push_back(p);
        }
        LatticePoint hit;
        bool found = false;
        while (!queue.empty() && !found) {
            LatticePoint p = queue.front();
            queue.pop_front();
            for (const auto& q : all) {
                if (parent.contains(q) || linf_distance(p, q) != 1) continue;
                parent.emplace(q, p);
                for (std::size_t c = 1; c < comps.size() && !found; ++c) {
                    if (comps[c].contains(q)) {
                        hit = q;
                        found = true;
                    }
                }
                if (found) break;
                queue.push_back(q);
            }
        }
        internal_check(found, "connect_within: universe is not 1-connected");
        for (LatticePoint p = hit;; p = parent.at(p)) {
            current.push_back(p);
            if (parent.at(p) == p) break;
        }
        comps = one_connected_components(LatticeSet::from_points(current));
    }
    return LatticeSet::from_points(std::move(current));
}

}  // namespace detail

DiscreteWitness solve(const CellLabeling& f, int m, bool shrink) {
    check_params(f, m);
    const GridShape& shape = f.shape();
    const int n = shape.n;
    const std::int64_t k = shape.k;

    DiscreteWitness w;
    if (n == 1) {
        // Z^0 is a single point, so P is that point and the whole column is
        // the crossing family.
        w.value_set = LatticeSet::from_points({LatticePoint{}});
        for (std::int64_t lin = 0; lin < k; ++lin) w.cells.push_back(cell_at(lin, shape));
        w.axis = 1;
        w.bound = 1;
        return w;
    }

    {
        auto violations = validate_condition(f, m);
        if (!violations.empty()) {
            throw InvalidInputError("solve: labeling violates the m-condition on " +
                                    std::to_string(violations.size()) + " cell pair(s)");
        }
    }

    const ColoringParams params(n - 1, m + 1);
    const std::int64_t cells = shape.cell_count();
    const int d = n - 1;
    CellLabeling composed(shape, 1);
    {
        const auto flat = f.flat();
        auto out = composed.flat_mutable();
        for (std::int64_t lin = 0; lin < cells; ++lin) {
            out[lin] = color(flat.subspan(lin * d, d), params);
        }
    }

    ChessboardWitness cw = find_crossing(composed);

    const ClusterId id = cluster_of(f.value_point(cw.cells.front()), params);
    LatticeSet cluster = enumerate_cluster(id, params);
    std::vector<LatticePoint> family_values;
    for (const auto& c : cw.cells) {
        LatticePoint v = f.value_point(c);
        detail::internal_check(cluster.contains(v),
                               "solve: crossing family values escape one cluster");
        family_values.push_back(std::move(v));
    }

    w.value_set = shrink
        ? detail::connect_within(cluster, LatticeSet::from_points(std::move(family_values)))
        : std::move(cluster);
    w.cells = std::move(cw.cells);
    w.axis = cw.axis;
    w.bound = cluster_size(params);
    return w;
}

}  // namespace levelcross

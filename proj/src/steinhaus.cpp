#include "levelcross/steinhaus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace levelcross {

namespace {

struct DenseUnionFind {
    std::vector<std::int32_t> parent;

    explicit DenseUnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

ChessboardWitness find_crossing(const CellLabeling& coloring) {
    const GridShape& shape = coloring.shape();
    const int n = shape.n;
    const std::int64_t k = shape.k;
    const std::int64_t cells = shape.cell_count();
    if (coloring.value_dim() != 1) {
        throw InvalidInputError("find_crossing: coloring must have 1-dimensional values");
    }
    if (cells > std::numeric_limits<std::int32_t>::max()) {
        throw InvalidInputError("find_crossing: grid too large");
    }
    const auto flat = coloring.flat();
    for (std::int64_t lin = 0; lin < cells; ++lin) {
        if (flat[lin] < 1 || flat[lin] > n) {
            throw InvalidInputError("find_crossing: color outside 1..n");
        }
    }

    // Only lexicographically-positive offsets: each adjacent pair is visited
    // exactly once, from its smaller cell.
    std::vector<std::vector<std::int32_t>> offsets;
    std::vector<std::int64_t> deltas;
    {
        std::vector<std::int64_t> stride(n);
        stride[n - 1] = 1;
        for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * k;
        for (const auto& off : detail::neighbor_offsets(n, 0)) {
            int first_nonzero = 0;
            while (off[first_nonzero] == 0) ++first_nonzero;
            if (off[first_nonzero] < 0) continue;
            std::int64_t delta = 0;
            for (int s = 0; s < n; ++s) delta += static_cast<std::int64_t>(off[s]) * stride[s];
            offsets.push_back(off);
            deltas.push_back(delta);
        }
    }

    DenseUnionFind uf(static_cast<std::size_t>(cells));
    std::vector<std::int32_t> idx(n, 1);
    std::int64_t lin = 0;
    do {
        const std::int64_t c = flat[lin];
        for (std::size_t o = 0; o < offsets.size(); ++o) {
            bool ok = true;
            for (int s = 0; s < n; ++s) {
                const std::int32_t v = idx[s] + offsets[o][s];
                if (v < 1 || v > k) {
                    ok = false;
                    break;
                }
            }
            if (ok && flat[lin + deltas[o]] == c) {
                uf.unite(static_cast<std::int32_t>(lin),
                         static_cast<std::int32_t>(lin + deltas[o]));
            }
        }
        ++lin;
    } while (detail::advance_index(idx, k));

    // Per component: per-axis index range. Component id = root = min linear
    // index, which is also the lexicographically smallest member.
    struct Extent {
        std::vector<std::int32_t> lo, hi;
    };
    std::vector<std::int32_t> root_of(static_cast<std::size_t>(cells));
    std::vector<Extent> extent_by_root;
    std::vector<std::int32_t> extent_slot(static_cast<std::size_t>(cells), -1);
    std::vector<std::int32_t> roots;
    idx.assign(n, 1);
    lin = 0;
    do {
        const std::int32_t r = uf.find(static_cast<std::int32_t>(lin));
        root_of[lin] = r;
        if (extent_slot[r] < 0) {
            extent_slot[r] = static_cast<std::int32_t>(extent_by_root.size());
            extent_by_root.push_back(Extent{std::vector<std::int32_t>(idx), std::vector<std::int32_t>(idx)});
            roots.push_back(r);
        } else {
            Extent& e = extent_by_root[extent_slot[r]];
            for (int s = 0; s < n; ++s) {
                e.lo[s] = std::min(e.lo[s], idx[s]);
                e.hi[s] = std::max(e.hi[s], idx[s]);
            }
        }
        ++lin;
    } while (detail::advance_index(idx, k));

    // smallest color, then smallest axis, then smallest representative
    std::int64_t best_color = std::numeric_limits<std::int64_t>::max();
    int best_axis = std::numeric_limits<int>::max();
    std::int32_t best_root = -1;
    for (std::int32_t r : roots) {
        const Extent& e = extent_by_root[extent_slot[r]];
        const std::int64_t color = flat[r];
        for (int s = 0; s < n; ++s) {
            if (e.lo[s] == 1 && e.hi[s] == k) {
                if (std::tuple(color, s + 1, r) < std::tuple(best_color, best_axis, best_root < 0 ? std::numeric_limits<std::int32_t>::max() : best_root)) {
                    best_color = color;
                    best_axis = s + 1;
                    best_root = r;
                }
                break;  // smallest axis of this component is enough
            }
        }
    }
    if (best_root < 0) {
        throw TheoremViolationError("find_crossing: no monochromatic crossing found");
    }

    ChessboardWitness w;
    w.color = best_color;
    w.axis = best_axis;
    for (std::int64_t l = 0; l < cells; ++l) {
        if (root_of[l] == best_root) w.cells.push_back(cell_at(l, shape));
    }
    detail::internal_check(static_cast<std::int64_t>(w.cells.size()) >= k,
                           "find_crossing: crossing family smaller than k");
    return w;
}

}  // namespace levelcross

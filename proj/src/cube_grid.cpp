#include "levelcross/cube_grid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace levelcross {

std::int64_t GridShape::cell_count() const {
    std::int64_t count = 1;
    for (int s = 0; s < n; ++s) {
        if (count > std::numeric_limits<std::int64_t>::max() / k) {
            throw InvalidInputError("GridShape: k^n overflows 64 bits");
        }
        count *= k;
    }
    return count;
}

bool cell_in_shape(const CellIndex& c, const GridShape& shape) {
    if (static_cast<int>(c.i.size()) != shape.n) return false;
    for (std::int32_t v : c.i) {
        if (v < 1 || v > shape.k) return false;
    }
    return true;
}

std::int64_t linear_index(const CellIndex& c, const GridShape& shape) {
    if (!cell_in_shape(c, shape)) throw InvalidInputError("linear_index: cell outside shape");
    std::int64_t lin = 0;
    for (int s = 0; s < shape.n; ++s) lin = lin * shape.k + (c.i[s] - 1);
    return lin;
}

CellIndex cell_at(std::int64_t lin, const GridShape& shape) {
    CellIndex c;
    c.i.resize(shape.n);
    for (int s = shape.n - 1; s >= 0; --s) {
        c.i[s] = static_cast<std::int32_t>(lin % shape.k) + 1;
        lin /= shape.k;
    }
    return c;
}

RationalBox cube_bounds(const CellIndex& c, const GridShape& shape) {
    if (!cell_in_shape(c, shape)) throw InvalidInputError("cube_bounds: cell outside shape");
    RationalBox box;
    box.denom = shape.k;
    box.lo_num.resize(shape.n);
    box.hi_num.resize(shape.n);
    for (int s = 0; s < shape.n; ++s) {
        box.lo_num[s] = c.i[s] - 1;
        box.hi_num[s] = c.i[s];
    }
    return box;
}

int intersection_dim(const CellIndex& a, const CellIndex& b, const GridShape& shape) {
    if (!cell_in_shape(a, shape) || !cell_in_shape(b, shape)) {
        throw InvalidInputError("intersection_dim: cell outside shape");
    }
    int equal = 0;
    for (int s = 0; s < shape.n; ++s) {
        const std::int32_t gap = a.i[s] > b.i[s] ? a.i[s] - b.i[s] : b.i[s] - a.i[s];
        if (gap > 1) return -1;
        if (gap == 0) ++equal;
    }
    return equal;
}

namespace detail {

std::vector<std::vector<std::int32_t>> detail_offsets_impl(int n, int min_zeros) {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> off(n, -1);
    while (true) {
        int zeros = 0;
        bool all_zero = true;
        for (std::int32_t v : off) {
            if (v == 0) ++zeros;
            else all_zero = false;
        }
        if (!all_zero && zeros >= min_zeros) out.push_back(off);

        int s = n - 1;
        while (s >= 0 && off[s] == 1) off[s--] = -1;
        if (s < 0) break;
        ++off[s];
    }
    return out;
}

std::vector<std::vector<std::int32_t>> neighbor_offsets(int n, int min_zeros) {
    return detail_offsets_impl(n, min_zeros);
}

}  // namespace detail

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
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

std::vector<std::vector<CellIndex>> components_min_dim(const std::vector<CellIndex>& cells,
                                                       int r, const GridShape& shape) {
    if (r < 0 || r > shape.n) throw InvalidInputError("components_min_dim: r out of 0..n");
    std::vector<CellIndex> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::size_t count = sorted.size();
    if (count == 0) return {};
    for (const auto& c : sorted) {
        if (!cell_in_shape(c, shape)) {
            throw InvalidInputError("components_min_dim: cell outside shape");
        }
    }

    std::unordered_map<std::int64_t, std::int32_t> by_lin;
    by_lin.reserve(count * 2);
    for (std::size_t idx = 0; idx < count; ++idx) {
        by_lin.emplace(linear_index(sorted[idx], shape), static_cast<std::int32_t>(idx));
    }

    const auto offsets = detail::neighbor_offsets(shape.n, r);
    UnionFind uf(count);
    CellIndex probe;
    probe.i.resize(shape.n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (const auto& off : offsets) {
            bool ok = true;
            for (int s = 0; s < shape.n; ++s) {
                probe.i[s] = sorted[idx].i[s] + off[s];
                if (probe.i[s] < 1 || probe.i[s] > shape.k) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            auto it = by_lin.find(linear_index(probe, shape));
            if (it != by_lin.end()) uf.unite(static_cast<std::int32_t>(idx), it->second);
        }
    }

    std::unordered_map<std::int32_t, std::vector<CellIndex>> groups;
    for (std::size_t idx = 0; idx < count; ++idx) {
        groups[uf.find(static_cast<std::int32_t>(idx))].push_back(sorted[idx]);
    }
    std::vector<std::vector<CellIndex>> parts;
    parts.reserve(groups.size());
    for (auto& [root, members] : groups) parts.push_back(std::move(members));
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return parts;
}

std::vector<int> crossing_axes(const std::vector<CellIndex>& cells, const GridShape& shape) {
    if (cells.empty()) return {};
    if (components_min_dim(cells, 0, shape).size() != 1) return {};

    std::vector<int> axes;
    for (int s = 0; s < shape.n; ++s) {
        bool low = false, high = false;
        for (const auto& c : cells) {
            if (c.i[s] == 1) low = true;
            if (c.i[s] == shape.k) high = true;
            if (low && high) break;
        }
        if (low && high) axes.push_back(s + 1);
    }
    return axes;
}

CellLabeling::CellLabeling(GridShape shape, int value_dim)
    : shape_(shape), value_dim_(value_dim) {
    if (value_dim < 0) throw InvalidInputError("CellLabeling: value_dim must be >= 0");
    const std::int64_t cells = shape_.cell_count();
    if (value_dim > 0 &&
        cells > static_cast<std::int64_t>(std::numeric_limits<std::size_t>::max() / 16) / value_dim) {
        throw InvalidInputError("CellLabeling: grid too large to materialize");
    }
    data_.assign(static_cast<std::size_t>(cells * value_dim), 0);
}

LatticePoint CellLabeling::value_point(const CellIndex& c) const {
    auto v = value(c);
    return LatticePoint(std::vector<std::int64_t>(v.begin(), v.end()));
}

void CellLabeling::set_value(std::int64_t lin, std::span<const std::int64_t> v) {
    if (static_cast<int>(v.size()) != value_dim_) {
        throw InvalidInputError("CellLabeling: value dimension mismatch");
    }
    std::copy(v.begin(), v.end(), data_.begin() + lin * value_dim_);
}

void CellLabeling::set_value(const CellIndex& c, const LatticePoint& v) {
    set_value(linear_index(c, shape_), std::span<const std::int64_t>(v.coords));
}

}  // namespace levelcross

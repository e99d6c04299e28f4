#include "levelcross/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace levelcross {

namespace {

struct PointHash {
    std::size_t operator()(const LatticePoint& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (std::int64_t c : p.coords) {
            h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

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

LatticeSet LatticeSet::from_points(std::vector<LatticePoint> pts) {
    if (!pts.empty()) {
        const int d = pts.front().dim();
        for (const auto& p : pts) {
            if (p.dim() != d) throw InvalidInputError("LatticeSet: mixed point dimensions");
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticeSet s;
    s.points_ = std::move(pts);
    return s;
}

bool LatticeSet::contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::int64_t linf_distance(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) throw InvalidInputError("linf_distance: dimension mismatch");
    std::int64_t d = 0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        d = std::max(d, std::abs(a[s] - b[s]));
    }
    return d;
}

std::int64_t linf_distance(const LatticePoint& a, const LatticePoint& b) {
    return linf_distance(std::span<const std::int64_t>(a.coords),
                         std::span<const std::int64_t>(b.coords));
}

namespace detail {

std::vector<LatticeSet> components_within_radius(const LatticeSet& s, std::int64_t r) {
    const auto& pts = s.points();
    const std::size_t n = pts.size();
    if (n == 0) return {};

    UnionFind uf(n);
    const int d = pts.front().dim();

    // Neighbor enumeration through a point index beats the O(n^2) pairwise
    // scan whenever the offset cube (2r+1)^d is small; fall back otherwise.
    double offsets = 1.0;
    for (int s_ = 0; s_ < d; ++s_) offsets *= static_cast<double>(2 * r + 1);
    if (d > 0 && offsets <= 1e5 && offsets < static_cast<double>(n) * d) {
        std::unordered_map<LatticePoint, std::int32_t, PointHash> index;
        index.reserve(n * 2);
        for (std::size_t i = 0; i < n; ++i) index.emplace(pts[i], static_cast<std::int32_t>(i));

        std::vector<std::int64_t> off(d, -r);
        LatticePoint probe;
        probe.coords.resize(d);
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(off.begin(), off.end(), -r);
            while (true) {
                bool zero = true;
                for (int s_ = 0; s_ < d; ++s_) {
                    probe.coords[s_] = pts[i].coords[s_] + off[s_];
                    if (off[s_] != 0) zero = false;
                }
                if (!zero) {
                    auto it = index.find(probe);
                    if (it != index.end()) uf.unite(static_cast<std::int32_t>(i), it->second);
                }
                int s_ = d - 1;
                while (s_ >= 0 && off[s_] == r) off[s_--] = -r;
                if (s_ < 0) break;
                ++off[s_];
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (linf_distance(pts[i], pts[j]) <= r) {
                    uf.unite(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
                }
            }
        }
    }

    std::unordered_map<std::int32_t, std::vector<LatticePoint>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        groups[uf.find(static_cast<std::int32_t>(i))].push_back(pts[i]);
    }
    std::vector<std::vector<LatticePoint>> parts;
    parts.reserve(groups.size());
    for (auto& [root, members] : groups) parts.push_back(std::move(members));
    // Members are already sorted (pts is sorted and grouping preserves order),
    // so ordering parts by first member gives the lexicographic-minimum rule.
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<LatticeSet> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(LatticeSet::from_points(std::move(p)));
    return out;
}

}  // namespace detail

std::vector<LatticeSet> one_connected_components(const LatticeSet& s) {
    return detail::components_within_radius(s, 1);
}

bool is_one_connected(const LatticeSet& s) {
    return s.empty() || one_connected_components(s).size() == 1;
}

}  // namespace levelcross

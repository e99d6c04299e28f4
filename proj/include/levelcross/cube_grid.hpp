#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levelcross/lattice.hpp"

namespace levelcross {

/// The decomposition of the unit n-cube into k^n closed subcubes of side 1/k.
struct GridShape {
    int n = 1;
    std::int64_t k = 1;

    GridShape(int n_, std::int64_t k_) : n(n_), k(k_) {
        if (n < 1 || k < 1) throw InvalidInputError("GridShape: need n >= 1 and k >= 1");
    }

    /// k^n, guarded against overflow.
    std::int64_t cell_count() const;

    friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Index of one subcube: a vector in [k]^n (1-based per axis).
struct CellIndex {
    std::vector<std::int32_t> i;

    CellIndex() = default;
    explicit CellIndex(std::vector<std::int32_t> v) : i(std::move(v)) {}
    CellIndex(std::initializer_list<std::int32_t> v) : i(v) {}

    friend bool operator==(const CellIndex&, const CellIndex&) = default;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

bool cell_in_shape(const CellIndex& c, const GridShape& shape);

/// Lexicographic (row-major, last axis fastest) linearization; the inverse
/// of cell_at. Throws on out-of-range indices.
std::int64_t linear_index(const CellIndex& c, const GridShape& shape);
CellIndex cell_at(std::int64_t lin, const GridShape& shape);

/// Closed box prod_s [(i_s - 1)/k, i_s/k] held exactly: integer numerators
/// over the common denominator k. Floating point never enters grid geometry.
struct RationalBox {
    std::int64_t denom = 1;
    std::vector<std::int64_t> lo_num;
    std::vector<std::int64_t> hi_num;

    friend bool operator==(const RationalBox&, const RationalBox&) = default;
};

RationalBox cube_bounds(const CellIndex& c, const GridShape& shape);

/// Dimension of the shared face of subcubes a and b: -1 when they do not
/// intersect (index gap > 1 on some axis), otherwise the count of equal
/// index coordinates.
int intersection_dim(const CellIndex& a, const CellIndex& b, const GridShape& shape);

/// Maximal components of `cells` under the relation intersection_dim >= r.
/// r = 0 is plain connectivity of the union; components are ordered by
/// lexicographically smallest member.
std::vector<std::vector<CellIndex>> components_min_dim(const std::vector<CellIndex>& cells,
                                                       int r, const GridShape& shape);

/// Axes i such that `cells` forms a single r=0 component whose union meets
/// both faces {x_i = 0} and {x_i = 1}; ascending. Empty input gives no axes.
std::vector<int> crossing_axes(const std::vector<CellIndex>& cells, const GridShape& shape);

/// A total map CellIndex -> Z^d stored densely in row-major order (d = 1 for
/// chessboard colors, d = n-1 for lattice-valued labelings).
class CellLabeling {
public:
    CellLabeling(GridShape shape, int value_dim);

    const GridShape& shape() const { return shape_; }
    int value_dim() const { return value_dim_; }

    std::span<const std::int64_t> value(std::int64_t lin) const {
        return {data_.data() + lin * value_dim_, static_cast<std::size_t>(value_dim_)};
    }
    std::span<const std::int64_t> value(const CellIndex& c) const {
        return value(linear_index(c, shape_));
    }
    LatticePoint value_point(const CellIndex& c) const;

    void set_value(std::int64_t lin, std::span<const std::int64_t> v);
    void set_value(const CellIndex& c, const LatticePoint& v);

    /// Raw row-major storage, value_dim entries per cell.
    std::span<const std::int64_t> flat() const { return data_; }
    std::span<std::int64_t> flat_mutable() { return data_; }

    friend bool operator==(const CellLabeling&, const CellLabeling&) = default;

private:
    GridShape shape_;
    int value_dim_;
    std::vector<std::int64_t> data_;
};

namespace detail {

/// Odometer over [k]^n in lexicographic order. Returns false once exhausted.
inline bool advance_index(std::vector<std::int32_t>& idx, std::int64_t k) {
    int s = static_cast<int>(idx.size()) - 1;
    while (s >= 0 && idx[s] == k) idx[s--] = 1;
    if (s < 0) return false;
    ++idx[s];
    return true;
}

/// Nonzero offsets in {-1,0,1}^n with at least `min_zeros` zero entries,
/// i.e. the adjacency stencil for intersection_dim >= r.
std::vector<std::vector<std::int32_t>> neighbor_offsets(int n, int min_zeros);

}  // namespace detail

}  // namespace levelcross

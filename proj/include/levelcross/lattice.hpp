#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levelcross/errors.hpp"

namespace levelcross {

/// A point of Z^d under the l-infinity metric. d = 0 is the one-point
/// space Z^0 = {0}, carried as an empty coordinate vector.
///
/// Coordinates are 64-bit signed; every shipped scenario stays within
/// |coord| <= 10^6, far from overflow even after the coloring's matrix
/// arithmetic.
struct LatticePoint {
    std::vector<std::int64_t> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<std::int64_t> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) = default;
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) = default;
};

/// A finite subset of Z^d: sorted, duplicate-free, all points of equal
/// dimension.
class LatticeSet {
public:
    LatticeSet() = default;

    /// Normalizes (sorts, removes duplicates) and checks dimensions agree.
    static LatticeSet from_points(std::vector<LatticePoint> pts);

    const std::vector<LatticePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const LatticePoint& p) const;

    /// Dimension of the member points; -1 for the empty set.
    int dim() const { return points_.empty() ? -1 : points_.front().dim(); }

    friend bool operator==(const LatticeSet& a, const LatticeSet& b) = default;

private:
    std::vector<LatticePoint> points_;
};

std::int64_t linf_distance(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// max_s |a_s - b_s|; zero iff a == b. Throws InvalidInputError on
/// dimension mismatch.
std::int64_t linf_distance(const LatticePoint& a, const LatticePoint& b);

/// Partition of S into maximal 1-connected pieces (chains of steps of
/// l-infinity length <= 1). Parts are ordered by their lexicographically
/// smallest member and sorted internally, so output is reproducible.
std::vector<LatticeSet> one_connected_components(const LatticeSet& s);

/// True iff S is empty or forms a single 1-connected component.
bool is_one_connected(const LatticeSet& s);

namespace detail {
// r-connectivity for arbitrary radius; only r = 1 is part of the public
// surface.
std::vector<LatticeSet> components_within_radius(const LatticeSet& s, std::int64_t r);
}  // namespace detail

}  // namespace levelcross

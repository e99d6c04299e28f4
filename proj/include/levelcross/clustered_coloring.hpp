#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levelcross/lattice.hpp"

namespace levelcross {

/// Parameters of the explicit clustered coloring of Z^n: lattice dimension n
/// and distance parameter m. The coloring uses n+1 colors; its monochromatic
/// components (clusters) have exactly n!*m^n points and same-color clusters
/// are more than m apart in l-infinity.
struct ColoringParams {
    int n = 1;
    std::int64_t m = 1;

    ColoringParams(int n_, std::int64_t m_) : n(n_), m(m_) {
        if (n < 1 || m < 1) throw InvalidInputError("ColoringParams: need n >= 1 and m >= 1");
    }
};

/// Identifies the cluster V_k^u: translate index u in Z^n and layer k in 0..n.
struct ClusterId {
    std::int64_t k = 0;
    LatticePoint u;

    friend bool operator==(const ClusterId&, const ClusterId&) = default;
    friend auto operator<=>(const ClusterId&, const ClusterId&) = default;
};

/// Exact decomposition of a point t as t = v + A*u + k*(m,...,m) with v in
/// the box V = prod_i [i*m].
struct Decode {
    LatticePoint v;
    LatticePoint u;
    std::int64_t k = 0;

    ClusterId cluster() const { return ClusterId{k, u}; }
};

/// The upper-triangular matrix A driving the cluster translates, 1-based:
/// A[i][j] = 0 for i>j, (i+1)*m for i=j, m for i<j.
std::vector<std::vector<std::int64_t>> matrix_a(const ColoringParams& params);

/// Inverts the cluster decomposition for t via the closed-form recurrences:
///
///   v_1 = (t_1 - 1) mod m + 1
///   v_i = ((t_i - t_{i-1}) mod (i m) + v_{i-1} - 1) mod (i m) + 1
///   k   = ((t_n - v_n)/m) mod (n+1)
///   u_n = ((t_n - v_n)/m - k) / (n+1)
///   u_{i-1} = u_i - (t_i - t_{i-1} - (v_i - v_{i-1})) / (i m)
///
/// All "mod" take the nonnegative remainder regardless of sign. Every
/// division above is provably exact; decode verifies exactness and the
/// reconstruction identity at runtime and throws TheoremViolationError on
/// failure (that can only mean a coding bug).
Decode decode(const LatticePoint& t, const ColoringParams& params);

/// Color of t in [n+1]; equals decode(t).k + 1.
std::int64_t color(const LatticePoint& t, const ColoringParams& params);

/// Allocation-free core of color() for hot loops.
std::int64_t color(std::span<const std::int64_t> t, const ColoringParams& params);

/// The (k, u) with t in V_k^u.
ClusterId cluster_of(const LatticePoint& t, const ColoringParams& params);

/// Materializes V_k^u = {v + A*u + k*(m,..,m) : v in V}; exactly n!*m^n points.
LatticeSet enumerate_cluster(const ClusterId& id, const ColoringParams& params);

/// n! * m^n, the cardinality of every cluster.
std::int64_t cluster_size(const ColoringParams& params);

}  // namespace levelcross

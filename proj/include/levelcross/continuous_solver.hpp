#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "levelcross/discrete_solver.hpp"

namespace levelcross {

/// A Lipschitz function I^n -> R^(n-1) with declared constants:
/// |f(x)-f(y)|_inf <= lipschitz * |x-y|_inf and all outputs inside
/// [-bound, bound]^(n-1). eval must be pure and safe for concurrent calls;
/// it writes n-1 doubles into `out`.
struct ContinuousFn {
    int n = 2;
    double lipschitz = 1.0;
    double bound = 1.0;
    std::function<void(std::span<const double>, std::span<double>)> eval;

    std::vector<double> operator()(std::span<const double> x) const {
        std::vector<double> out(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
        eval(x, out);
        return out;
    }
};

/// f composed with the affine output map y -> y/(2M) + 1/2, which lands in
/// I^(n-1); carries the data needed to map witnesses back.
struct RescaledFn {
    ContinuousFn fn;   // outputs in I^(n-1), Lipschitz constant L/(2M)
    double scale = 1;  // 2M

    /// Inverse affine map for points: p = scale * (p0 - 1/2).
    std::vector<double> map_back_point(std::span<const double> p0) const;
    /// Radii scale linearly: eps = scale * eps0.
    double map_back_radius(double eps0) const { return scale * eps0; }
};

/// An approximate level-set crossing: the union of `cells` (on grid) lies in
/// f^{-1}[B(p, epsilon)] (Euclidean ball) and connects the opposite faces of
/// `axis`.
struct ContinuousWitness {
    std::vector<double> p;
    GridShape grid{1, 1};
    std::vector<CellIndex> cells;  // sorted lexicographically
    int axis = 0;
    double epsilon = 0;
};

/// Per-step diagnostics of refine_sequence, between witness j and j+1.
struct RefineStepDiag {
    double hausdorff = 0;       // between consecutive cell-union samplings
    double p_drift = 0;         // |p_{j+1} - p_j|_2
    bool unions_intersect = false;  // exact rational box-overlap test
};

struct RefineResult {
    std::vector<ContinuousWitness> witnesses;
    std::vector<RefineStepDiag> diagnostics;
};

RescaledFn rescale(const ContinuousFn& f);

/// Smallest k with 3*sqrt(n-1)*C(n)/(2k) < epsilon0, where C(n) is the best
/// known value-set size bound at m = 0: C(2) = 1, C(3) = 2, C(n) = (n-1)!
/// for n >= 4.
std::int64_t choose_resolution(int n, double epsilon0);

/// Labels every cell of an evaluation grid with the index of the K_k^(n-1)
/// cube containing f0(center(cell)). The grid is the coarsest with
/// L0/m_grid <= 1/(4k), which keeps the image of each cell inside the
/// half-enlargement of its assigned cube, so adjacent cells always receive
/// l-infinity-adjacent indices (the m = 0 hypothesis holds by construction).
CellLabeling discretize(const RescaledFn& f0, std::int64_t k);

/// Full approximate pipeline: rescale, pick the resolution for
/// epsilon0 = epsilon/(2M), discretize, solve the discrete problem at m = 0,
/// and report p as the enlarged-cube center of the lexicographically smallest
/// value in P, mapped back through the affine output map.
ContinuousWitness approximate_level_crossing(const ContinuousFn& f, double epsilon);

/// Witnesses at epsilon, epsilon/2, ..., epsilon/2^(steps-1). Witnesses are
/// re-labeled with the majority crossing axis where their cells support it,
/// and consecutive pairs get Hausdorff / drift / overlap diagnostics.
RefineResult refine_sequence(const ContinuousFn& f, double epsilon_start, int steps);

/// max of the two directed farthest-nearest-point distances, Euclidean.
/// Points are flat d-dimensional rows. Throws on empty input or mismatched
/// dimensions.
double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b);

/// The chessboard theorem routed through the continuous solver: each color
/// i < n contributes the coordinate function dist_inf(x, union of color-i
/// cells), the level-crossing pipeline runs on the resulting function, and
/// the fine crossing band is snapped back to a monochromatic coarse family.
/// The snapped witness is verified independently and checked for agreement
/// with the direct combinatorial search before being returned.
ChessboardWitness chessboard_via_distance_fields(const CellLabeling& coloring);

/// The 1-Lipschitz coordinate field bundle used above; exposed for tests.
ContinuousFn make_distance_coloring_fn(const CellLabeling& coloring);

}  // namespace levelcross

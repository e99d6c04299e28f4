#pragma once

#include <vector>

#include "levelcross/clustered_coloring.hpp"
#include "levelcross/cube_grid.hpp"
#include "levelcross/steinhaus.hpp"

namespace levelcross {

/// Output of solve(): a 1-connected value set P of at most `bound` points,
/// a connected crossing cell family whose values all lie in P, and the axis
/// whose opposite faces the family connects.
struct DiscreteWitness {
    LatticeSet value_set;
    std::vector<CellIndex> cells;  // sorted lexicographically
    int axis = 0;
    std::int64_t bound = 0;  // (n-1)! * (m+1)^(n-1)
};

/// All cell pairs (a, b), a < b lexicographically, with intersection
/// dimension >= m whose values differ by more than 1 in l-infinity. An empty
/// result means F satisfies the hypothesis at parameter m. Violations are
/// data, not errors; the list is sorted by (a, b).
std::vector<std::pair<CellIndex, CellIndex>> validate_condition(const CellLabeling& f, int m);

/// Runs the crossing construction for a labeling F : grid -> Z^(n-1)
/// satisfying the m-condition: composes F with the clustered coloring of
/// Z^(n-1) at distance parameter m+1 (an n-coloring of the cells), finds a
/// monochromatic crossing, and returns the cluster containing the family's
/// values as P.
///
/// With shrink = true, P is post-processed to a smaller 1-connected subset of
/// the cluster that still contains every value of the family (greedy
/// shortest-path completion; deterministic, not guaranteed minimal).
///
/// Throws InvalidInputError when validate_condition is nonempty and
/// TheoremViolationError if the family's values escape one cluster (which
/// the construction proves impossible).
DiscreteWitness solve(const CellLabeling& f, int m, bool shrink = false);

namespace detail {
/// Smallest 1-connected superset of `target` found by greedy path insertion
/// within `universe`; target must be a subset of the 1-connected universe.
LatticeSet connect_within(const LatticeSet& universe, const LatticeSet& target);
}  // namespace detail

}  // namespace levelcross

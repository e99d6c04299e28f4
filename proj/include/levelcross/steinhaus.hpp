#pragma once

#include <vector>

#include "levelcross/cube_grid.hpp"

namespace levelcross {

/// A monochromatic crossing: all `cells` carry `color`, they form a single
/// r=0 component, and their union meets both faces of `axis`.
struct ChessboardWitness {
    std::int64_t color = 0;
    std::vector<CellIndex> cells;  // sorted lexicographically
    int axis = 0;

    friend bool operator==(const ChessboardWitness&, const ChessboardWitness&) = default;
};

/// Finds a monochromatic cell family connecting opposite faces for an
/// n-coloring F of the k^n grid (values in 1..n). Such a family always
/// exists; an empty search means a connectivity bug, reported as
/// TheoremViolationError.
///
/// Selection is deterministic: smallest color, then smallest axis, then the
/// component with the lexicographically smallest cell. The returned cell set
/// is the entire monochromatic component.
ChessboardWitness find_crossing(const CellLabeling& coloring);

}  // namespace levelcross

#pragma once

#include <cstdint>
#include <random>

#include "levelcross/cube_grid.hpp"

namespace levelcross {

/// Uniform random n-coloring of the grid (values 1..colors), reproducible
/// from the seed (mt19937_64 with plain modulo reduction).
CellLabeling random_coloring(const GridShape& shape, int colors, std::uint64_t seed);

/// Random labeling F : grid -> Z^(n-1) satisfying the m-condition, built as
/// a lattice random walk in row-major order. Each new cell draws a value
/// inside the box of values allowed by its already-assigned neighbors of
/// intersection dimension >= m; if that box ever empties the whole labeling
/// restarts with a derived seed. Deterministic per seed.
CellLabeling random_valid_labeling_walk(const GridShape& shape, int m, std::uint64_t seed);

/// Random labeling obtained by flooring a random quadratic polynomial map at
/// the cell centers. Coefficients are scaled so adjacent centers move by at
/// most one unit per output coordinate, then halved until validate_condition
/// accepts the result. Deterministic per seed.
CellLabeling random_valid_labeling_poly(const GridShape& shape, int m, std::uint64_t seed);

}  // namespace levelcross

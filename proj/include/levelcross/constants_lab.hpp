#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "levelcross/cube_grid.hpp"

namespace levelcross {

/// A single-value crossing: one value whose preimage already contains a
/// connected family joining opposite faces.
struct SingletonWitness {
    LatticePoint value;
    std::vector<CellIndex> cells;
    int axis = 0;
};

/// Searches every occurring value of F for a crossing component of its
/// preimage. Selection is deterministic: lexicographically smallest value,
/// then smallest axis, then smallest component representative. Returns
/// nothing when no single value suffices.
std::optional<SingletonWitness> singleton_sufficient(const CellLabeling& f);

/// Flood-fill re-check that some component of the given value's preimage
/// connects opposite faces; shares no traversal code with
/// singleton_sufficient so the exhaustive runs are double-checked.
bool naive_value_crossing(const CellLabeling& f, const LatticePoint& value);

struct ExhaustiveReport {
    std::uint64_t enumerated = 0;  // labelings passing the m-condition
    std::uint64_t verified = 0;    // of those, with a singleton crossing
    double elapsed_seconds = 0;
    bool all_passed = false;
};

/// Enumerates every F : [k]^2 -> {-radius..radius} with F(1,1) = 0 that
/// satisfies the m-condition, and checks that each admits a single-value
/// crossing (the translation canonicalization F(1,1) = 0 is harmless: both
/// the condition and crossings are invariant under value shifts). Violating
/// prefixes are pruned during enumeration. Throws InfeasibleEnumerationError
/// when the projected state count exceeds `budget`; `workers` > 1 splits the
/// search on the second cell's value.
ExhaustiveReport exhaustive_check_c1(std::int64_t k, int m, std::int64_t radius,
                                     std::uint64_t budget = 2'000'000'000ULL, int workers = 1);

/// The 7^3 labeling showing one value can never suffice in dimension 3:
/// cells are colored by the clustered coloring of Z^3 at distance 1 (cluster
/// size 6, so a 7-cell crossing cannot stay inside one cluster) and colors
/// are injected into {0,1}^2, which keeps every value pair within distance 1.
CellLabeling build_prop53_witness();

}  // namespace levelcross

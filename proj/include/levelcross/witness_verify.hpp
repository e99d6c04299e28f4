#pragma once

#include <string>

#include "levelcross/continuous_solver.hpp"
#include "levelcross/discrete_solver.hpp"
#include "levelcross/steinhaus.hpp"

namespace levelcross {

/// Outcome of an independent witness check.
struct VerifyResult {
    bool ok = true;
    std::string reason;

    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

/// Checks a ChessboardWitness against the coloring it came from, using a
/// plain flood fill and direct face scans rather than the solver's
/// union-find, so solver bugs cannot hide behind shared code. Also enforces
/// the |cells| >= k size bound every crossing family must satisfy.
VerifyResult verify_chessboard_witness(const CellLabeling& coloring, const ChessboardWitness& w);

/// Same independence rules for a DiscreteWitness: P 1-connected (pairwise
/// BFS), every cell value inside P, one connected crossing family, and
/// |P| <= bound unless check_bound is false (structural re-checks at a
/// different parameter only).
VerifyResult verify_discrete_witness(const CellLabeling& f, const DiscreteWitness& w,
                                     bool check_bound = true);

/// Certifies a ContinuousWitness: connectivity and exact face contact of the
/// cell family, plus the rigorous sup bound
///
///   sup_{x in union} |f(x) - p|_2  <=  max over samples |f(s) - p|_2 + slack
///
/// sampled on the dyadic refinement lattice (3^n points per cell, deduplicated
/// across cells) with slack = max(L*h/2, sqrt(d)*L*h/4) for cell side h. The
/// max covers output dimensions beyond 4, where the plain L*h/2 term alone
/// would be optimistic; the sampled lattice leaves l-infinity gaps of h/4.
VerifyResult verify_continuous_witness(const ContinuousFn& f, const ContinuousWitness& w);

}  // namespace levelcross

#pragma once

#include <optional>
#include <string>

#include "levelcross/continuous_solver.hpp"
#include "levelcross/discrete_solver.hpp"
#include "levelcross/steinhaus.hpp"

namespace levelcross {

/// Parses {"n": int, "k": int, "d": int, "values": [[...] x k^n]} with values
/// in row-major (lexicographic index) order. Throws SchemaError naming the
/// first offending position. parse and serialize round-trip byte-identically.
CellLabeling parse_labeling(const std::string& json_text);

/// Canonical compact serialization of a labeling (inverse of parse_labeling).
std::string serialize_labeling(const CellLabeling& labeling);

/// Witness documents share the schema {"kind": "chessboard" | "discrete" |
/// "continuous", "p": ..., "axis": int, "cells": [...]} plus "bound" for
/// discrete and "epsilon"/"grid" for continuous witnesses. Cells are sorted;
/// integers print exactly and reals with 17 significant digits, so equal
/// witnesses produce equal bytes.
std::string emit_witness(const ChessboardWitness& w);
std::string emit_witness(const DiscreteWitness& w);
std::string emit_witness(const ContinuousWitness& w);

struct SvgOptions {
    int pixels = 512;       // square canvas edge
    bool legend = true;     // axis annotation text
};

/// Renders a 2-dimensional labeling as an SVG grid, value-hash colored, with
/// the witness cells outlined and the crossing axis annotated when a witness
/// is supplied. Throws UnsupportedDimensionError for n != 2.
std::string render_grid_svg(const CellLabeling& labeling,
                            const std::vector<CellIndex>* witness_cells = nullptr,
                            std::optional<int> witness_axis = std::nullopt,
                            const SvgOptions& options = {});

/// n = 3 fallback: one binary PPM (P6) per layer i_3 = 1..k, witness cells
/// brightened. Returned in layer order.
std::vector<std::string> render_grid_ppm_layers(const CellLabeling& labeling,
                                                const std::vector<CellIndex>* witness_cells = nullptr);

}  // namespace levelcross

#pragma once

#include <string>

#include "levelcross/continuous_solver.hpp"

namespace levelcross {

/// f(x) = (x_1, ..., x_{n-1}); level sets are lines parallel to the last
/// axis. L = 1, M = 1.
ContinuousFn make_projection(int n);

/// f(x) = x_1 - x_2 on I^2; level sets are diagonals. L = 1, M = 1.
ContinuousFn make_linear_diff();

/// f(x) = (x_1 - 1/2)^2 - (x_2 - 1/2)^2 on I^2, a saddle. L = 2, M = 1/4.
ContinuousFn make_quadratic_saddle();

/// Euclidean distance on I^2 to a polyline tracing a closed connected curve
/// built from a descending segment, a dense chord approximation of the
/// oscillating arc y = sin(1/(x - 1/4))/4 + 1/2, a vertical bar at x = 1/4,
/// and a final descending segment to (1, 0). The oscillation is truncated
/// after `oscillations` periods; the remaining tail hugs the bar within
/// 1/(4 + 2*pi*oscillations). L = sqrt(2) (l-infinity input norm), M = 1.5.
ContinuousFn make_sine_curve_distance(int oscillations = 40, int chords_per_period = 32);

/// Builds a function from a JSON spec: {"n": int, "lipschitz": r, "bound": r,
/// "pieces": [{"box": [[lo, hi] x n] optional, "components": [[{"c": r,
/// "p": [int x n]}, ...] x (n-1)]}]}. Evaluation uses the first piece whose
/// box contains x (a missing box matches everywhere). Throws SchemaError on
/// malformed documents.
ContinuousFn parse_function_spec(const std::string& json_text);

/// Registry lookup for the CLI: "proj", "linear", "quad", "sine", "proj3".
/// Throws InvalidInputError for unknown names.
ContinuousFn builtin_function(const std::string& name);

}  // namespace levelcross

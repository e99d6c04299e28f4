#pragma once

#include <iosfwd>

namespace levelcross {

/// Runs the per-module property checks at desk scale and prints one line per
/// suite. Returns true iff everything passed. This is the quick self-check
/// behind `verify`; the acceptance binary runs the full-scale version.
bool run_invariant_suite(std::ostream& out);

}  // namespace levelcross

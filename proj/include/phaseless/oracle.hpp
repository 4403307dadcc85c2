#pragma once

#include "phaseless/solver.hpp"

namespace phaseless {

struct OracleOptions {
  /// Largest degree bound accepted; 2^(n+1) sign vectors are enumerated.
  int max_degree = 20;
  /// Fix b_0 = +1 when y_0 != 0, visiting one vector per phase pair.
  bool fix_first_sign = true;
};

/// Brute-force solution set: interpolate (x_i, b_i y_i) over the first n+1
/// points for every sign vector b, keep the interpolants that match every
/// point. Complete by construction. Accepts any instance with at least n+1
/// points. Throws Error(InvalidInstance) or Error(TooLarge).
SolutionSet oracle_enumerate(const Instance& instance,
                             const OracleOptions& options = {});

/// More than one phase class fits the data.
bool is_ambiguous(const Instance& instance, const OracleOptions& options = {});

}  // namespace phaseless

#pragma once

#include <utility>
#include <vector>

#include "phaseless/interpolation.hpp"
#include "phaseless/upoly.hpp"

namespace phaseless {

/// Bound B on the magnitude of every integer root of every difference
/// L_b - L_b' of sign interpolants, together with the scaling M that makes
/// the expansions of y_j l_j(x) integral.
struct SeparationBound {
  Integer multiplier;  // M, the lcm of all coefficient denominators
  Integer bound;       // B = max_k 2 * sum_j |coeff of x^k in M y_j l_j|
};

/// Requires n + 1 points with distinct nodes and y >= 0.
SeparationBound separation_bound(const std::vector<Point>& points, int n);

/// The integer B + 1: one more absolute-value sample there pins down |p|
/// for every degree-<=n polynomial consistent with the n + 1 points.
/// Throws Error(DuplicateNode), Error(CountMismatch), Error(InvalidInstance).
Rat select_next_point(const std::vector<Point>& points, int n);

/// Two polynomials of degree <= n with equal absolute values on 2n nodes
/// and different |.|:
///   p = prod_{i<n} (x - x_i) + prod_{i>=n} (x - x_i),  q = difference.
/// Throws Error(OddCount) for an odd or empty node list, Error(DuplicateNode).
std::pair<UPoly, UPoly> counterexample_pair(const std::vector<Rat>& nodes);

}  // namespace phaseless

#pragma once

#include <optional>
#include <vector>

#include "phaseless/interpolation.hpp"
#include "phaseless/upoly.hpp"

namespace phaseless {

/// A phaseless retrieval instance compiled from a Partition instance.
///
/// The unknown p has degree <= n, is known exactly at k nodes, and is
/// observed without sign at n - k + 2 further nodes. A sign vector b admits
/// such a p iff sum_i b_i y_i alpha_i = S; with y_i = 3 |t_i S / alpha_i|
/// this reads 3 sum_i b'_i t_i + b'_last = 1, where b' = b * decode_signs.
struct ReductionInstance {
  int n = 0;
  int k = 0;
  std::vector<Point> exact_points;      // (r_i, v_i), i < k
  std::vector<Point> phaseless_points;  // (x_i, y_i), i = 0..n-k+1
  std::vector<Rat> weights;   // t_0..t_{n-k}, then the appended 1/3
  std::vector<int> decode_signs;
  std::vector<Rat> alpha;
  std::vector<Rat> beta;
  Rat s;  // sum of beta

  friend bool operator==(const ReductionInstance&,
                         const ReductionInstance&) = default;
};

/// Node-dependent part of the reduction: weights, alpha, beta and S depend
/// only on the nodes and the exact values, so one reducer serves every
/// weight vector of a given length.
class PartitionReducer {
 public:
  /// nodes: k exact nodes followed by n - k + 2 phaseless nodes.
  /// Throws Error(DuplicateNode), Error(CountMismatch), Error(DegenerateS).
  PartitionReducer(int n, int k, std::vector<Rat> nodes,
                   std::vector<Rat> exact_values);

  /// Throws Error(LengthMismatch) unless t has n - k + 1 entries.
  ReductionInstance reduce(const std::vector<Integer>& t) const;

  int n() const { return n_; }
  int k() const { return k_; }
  const Rat& s() const { return s_; }

 private:
  int n_;
  int k_;
  std::vector<Point> exact_;
  std::vector<Rat> phaseless_nodes_;
  std::vector<Rat> alpha_;
  std::vector<Rat> beta_;
  Rat s_;
};

/// Default nodes r_i = i for i = 0..n+1.
std::vector<Rat> default_reduction_nodes(int n);

/// Builds the reduction. Without explicit exact values it tries v_i = 1,
/// then v_i = i + 1, to avoid S = 0.
ReductionInstance reduce_partition(
    const std::vector<Integer>& t, int n, int k,
    const std::optional<std::vector<Rat>>& nodes = std::nullopt,
    const std::optional<std::vector<Rat>>& exact_values = std::nullopt);

/// sum_i b_i y_i alpha_i - S. Zero iff the signs admit an interpolant.
/// Throws Error(LengthMismatch).
Rat feasibility_residual(const ReductionInstance& inst, const std::vector<int>& b);

/// The Partition signing encoded by b, if b satisfies the feasibility
/// equation. Throws Error(LengthMismatch).
std::optional<std::vector<int>> decode_solution(const ReductionInstance& inst,
                                                const std::vector<int>& b);

/// Every b in {-1, +1}^(n-k+2) with zero residual, in ascending order
/// (lexicographic with -1 < +1). Gray-code walk over integer-scaled terms.
std::vector<std::vector<int>> zero_residual_signs(const ReductionInstance& inst);

/// Interpolates the exact points and the first n - k + 1 signed phaseless
/// values, and returns the polynomial when it also hits b_last * y_last.
std::optional<UPoly> consistent_polynomial(const ReductionInstance& inst,
                                           const std::vector<int>& b);

}  // namespace phaseless

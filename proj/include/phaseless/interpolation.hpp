#pragma once

#include <vector>

#include "phaseless/mpoly.hpp"
#include "phaseless/rational.hpp"
#include "phaseless/upoly.hpp"

namespace phaseless {

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Throws Error(DuplicateNode) if two nodes coincide.
void require_distinct_nodes(const std::vector<Rat>& xs);
std::vector<Rat> nodes_of(const std::vector<Point>& points);

/// Unique polynomial of degree <= m-1 through m points (Newton divided
/// differences, expanded to the monomial basis).
UPoly lagrange_interpolate(const std::vector<Point>& points);

/// The Lagrange basis l_j of the given nodes: l_j(x_i) = [i == j].
std::vector<UPoly> lagrange_basis(const std::vector<Rat>& xs);

/// w_i = prod_{j != i} 1 / (x_i - x_j). Needs at least two nodes.
std::vector<Rat> barycentric_weights(const std::vector<Rat>& xs);

/// All polynomials of degree <= n_total through the given points:
///   p(x, c) = L(x) + (c_0 + c_1 x + ... + c_{k-1} x^{k-1}) * prod (x - x_i)
/// with coefficients stored as affine polynomials in c.
struct AffineFamily {
  int n_total = 0;
  int k = 0;
  UPoly base;      // L(x)
  UPoly vanisher;  // prod (x - x_i)
  std::vector<MPoly> coeff_in_c;  // A_0(c) .. A_{n_total}(c)

  /// Coefficient A_i(c); zero polynomial past n_total.
  MPoly coeff(std::size_t i) const;
  /// p(x, c*) for a concrete parameter vector of length k.
  UPoly instantiate(const std::vector<Rat>& c) const;
};

AffineFamily affine_family(const std::vector<Point>& points, int k, int n_total);

struct ShiftedPoints {
  Rat shift;                   // the anchor node, subtracted from every x
  std::vector<Point> points;   // (x_j - shift, y_j)
  Rat anchor_value;            // y at the anchor, nonzero
};

/// Translates the points so a node with nonzero value sits at the origin.
/// The anchor is the nonzero-valued node of smallest |x|, ties toward the
/// smaller x. Throws Error(AllValuesZero) when every y is zero.
ShiftedPoints shift_origin(const std::vector<Point>& points);

}  // namespace phaseless

#pragma once

#include <optional>
#include <vector>

#include "phaseless/groebner.hpp"
#include "phaseless/interpolation.hpp"
#include "phaseless/upoly.hpp"

namespace phaseless {

/// A phaseless interpolation problem: find q of degree <= n with
/// |q(x_i)| = y_i at every point.
struct Instance {
  int n = 0;
  std::vector<Point> points;

  /// Freedom k = 2n + 1 - (number of points).
  int freedom() const { return 2 * n + 1 - static_cast<int>(points.size()); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws Error(InvalidInstance) on negative n, negative y or a repeated
/// node. With `require_solver_range`, also requires 0 <= k <= n.
void validate(const Instance& instance, bool require_solver_range = true);

/// Solutions up to global phase. Each polynomial is canonical (positive
/// leading coefficient) and the list is sorted by (degree, coefficients),
/// so two sets compare equal iff they hold the same polynomials.
struct SolutionSet {
  std::vector<UPoly> polys;
  /// False when a rational root search could not certify completeness.
  bool complete = true;

  std::size_t size() const { return polys.size(); }
  friend bool operator==(const SolutionSet& a, const SolutionSet& b) {
    return a.polys == b.polys;
  }
};

/// Total order on polynomials used for canonical solution lists.
bool canonical_less(const UPoly& a, const UPoly& b);
/// Canonicalizes, removes duplicates and sorts.
SolutionSet make_solution_set(std::vector<UPoly> polys, bool complete = true);

/// q if its leading coefficient is positive, -q otherwise; 0 stays 0.
UPoly canonicalize(const UPoly& q);

/// deg q <= n and |q(x_i)| = y_i exactly at every point.
bool verify(const UPoly& q, const Instance& instance);

/// Intermediate objects of one solver run, for diagnostics and tests.
struct SolveTrace {
  std::optional<ShiftedPoints> shift;  // empty for the all-zero instance
  Rat a0;
  AffineFamily family;
  std::vector<ATerm> a_terms;
  PolySystem system;
  GroebnerBasis basis;
  std::vector<std::vector<Rat>> roots;  // rational points of the basis
};

/// All q in Q_n[x] with |q(x_i)| = y_i, up to global phase.
///
/// Pipeline: shift a nonzero-valued node to the origin, parameterize the
/// degree-2n polynomials through the squared values, fix a0 = -y_anchor,
/// eliminate a_1..a_n, compute a lex Groebner basis, back-substitute rational
/// roots, rebuild q, undo the shift, verify and canonicalize.
/// Throws Error(InvalidInstance) or Error(NonZeroDimensional).
SolutionSet solve(const Instance& instance, SolveTrace* trace = nullptr);

/// Same as solve() with the freedom stated explicitly; a value different
/// from instance.freedom() throws Error(InvalidInstance).
SolutionSet solve(const Instance& instance, int k, SolveTrace* trace = nullptr);

/// The lex Groebner basis of the elimination system the solver builds.
/// Throws Error(AllValuesZero) for the all-zero instance.
GroebnerBasis instance_basis(const Instance& instance);

}  // namespace phaseless

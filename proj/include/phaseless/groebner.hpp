#pragma once

#include <vector>

#include "phaseless/elimination.hpp"
#include "phaseless/mpoly.hpp"
#include "phaseless/upoly.hpp"

namespace phaseless {

/// Reduced lex Groebner basis (c0 lowest). Elements are in primitive integer
/// form and sorted by ascending leading monomial; the unit ideal is {1}.
struct GroebnerBasis {
  std::size_t nvars = 0;
  std::vector<MPoly> elements;

  bool is_unit() const {
    return elements.size() == 1 && elements.front().is_constant();
  }
};

MPoly s_polynomial(const MPoly& f, const MPoly& g);

/// Full normal form of f modulo the polynomials in `by`, up to a nonzero
/// rational factor (reduction is fraction-free). Zero iff f reduces to 0.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& by);

GroebnerBasis buchberger(const std::vector<MPoly>& generators, std::size_t nvars);
/// Zero equations are dropped. An empty remainder means the zero ideal,
/// returned as a basis with no elements.
GroebnerBasis buchberger(const PolySystem& system);

/// The basis element involving only c{var}, as a univariate polynomial.
/// Throws Error(NoUnivariate) when no such nonconstant element exists.
UPoly extract_univariate(const GroebnerBasis& basis, std::size_t var);

/// All rational points of the variety of a zero-dimensional basis, found by
/// rational roots of the univariate element in c0, substitution, and
/// recursion on c1, c2, ... Branches whose roots are irrational or whose
/// substituted system is inconsistent are dropped. `complete` is cleared
/// when a root search hit its candidate cap.
struct TriangularSolution {
  std::vector<std::vector<Rat>> points;
  bool complete = true;
};
TriangularSolution triangular_solve(const GroebnerBasis& basis);

}  // namespace phaseless

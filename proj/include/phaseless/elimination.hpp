#pragma once

#include <vector>

#include "phaseless/interpolation.hpp"
#include "phaseless/mpoly.hpp"

namespace phaseless {

/// a_i = numerator / (2 a0)^exponent, with a0 a fixed nonzero rational.
struct ATerm {
  MPoly numerator;
  unsigned exponent = 0;

  /// The coefficient as an MPoly with the denominator folded in.
  MPoly value(const Rat& a0) const;
  Rat eval(const Rat& a0, const std::vector<Rat>& c) const;
};

/// Equations in c0..c{k-1} whose common zeros make p(x, c) a perfect square.
struct PolySystem {
  std::vector<MPoly> equations;
  int n = 0;
  int k = 0;
};

/// a0 = phase * anchor_value. Throws Error(ZeroAnchor) for a zero anchor and
/// Error(InvalidInstance) for a negative one or a phase other than +-1.
Rat fix_anchor(const Rat& anchor_value, int phase);

/// Square-root coefficients a_0..a_d of p(x, c), solved from the low-order
/// coefficient identities A_i = sum_{j=0}^{i} a_j a_{i-j}. The i-th term has
/// exponent i. Passing d = n_total continues the recursion past n, which
/// yields the "a_{n+1} = ... = a_{2n} = 0" presentation of the system.
std::vector<ATerm> a_recursion(const AffineFamily& family, const Rat& a0, int d);

/// Coefficient matching for n < i <= 2n:
///   sum_{j=i-n}^{n} a_j a_{i-j} - A_i(c) = 0,
/// denominators cleared and every nonzero equation in primitive integer
/// form. Equations that vanish identically are kept as zero polynomials.
PolySystem build_system(const AffineFamily& family,
                        const std::vector<ATerm>& a_terms);

/// The alternative system a_{n+1}(c) = ... = a_{2n}(c) = 0 obtained by
/// running the recursion to 2n. Same zero set as build_system.
PolySystem build_extended_system(const AffineFamily& family, const Rat& a0,
                                 int n);

/// q(x) = sum a_i(c*) x^i.
UPoly reconstruct(const std::vector<ATerm>& a_terms, const Rat& a0,
                  const std::vector<Rat>& c);

}  // namespace phaseless

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "phaseless/rational.hpp"
#include "phaseless/upoly.hpp"

namespace phaseless {

struct RootResult {
  std::vector<Rat> roots;  // ascending, no multiplicities
  /// False when an integer factorization gave up before splitting a
  /// cofactor, so some candidate denominators/numerators were never tried.
  bool complete = true;
};

/// Every rational r with p(r) = 0, by the rational root theorem. Throws
/// Error(ZeroPolynomial) for p = 0.
RootResult rational_roots(const UPoly& p);

struct Factorization {
  std::vector<std::pair<Integer, unsigned>> factors;  // ascending primes
  bool complete = true;  // false: the largest factor may be composite
};

/// Prime factorization of |n| (n != 0) by trial division, then Pollard-Brent
/// rho on the cofactor with an iteration cap.
Factorization factorize(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Factorization& f);

}  // namespace phaseless

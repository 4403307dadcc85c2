#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "phaseless/rational.hpp"

namespace phaseless {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// trailing zeros are always stripped, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(std::initializer_list<Rat> coeffs) : UPoly(std::vector<Rat>(coeffs)) {}

  static UPoly constant(const Rat& c) { return UPoly({c}); }
  /// x - root
  static UPoly linear_root(const Rat& root) { return UPoly({-root, Rat(1)}); }
  /// Product of (x - r) over all r in roots.
  static UPoly from_roots(const std::vector<Rat>& roots);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rat coeff(std::size_t i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rat& leading() const { return coeffs_.back(); }

  Rat eval(const Rat& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend UPoly operator*(const Rat& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Quotient and remainder of Euclidean division. Divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd (zero if both inputs are zero).
  static UPoly gcd(UPoly a, UPoly b);

  UPoly derivative() const;
  UPoly monic() const;
  /// p(x + t).
  UPoly shifted(const Rat& t) const;

  /// Human-readable form, e.g. "x^3 + x^2 - 4*x - 2".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

inline Rat upoly_eval(const UPoly& p, const Rat& x) { return p.eval(x); }
inline UPoly upoly_mul(const UPoly& a, const UPoly& b) { return a * b; }

}  // namespace phaseless

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phaseless/rational.hpp"
#include "phaseless/upoly.hpp"

namespace phaseless {

/// Exponent vector over c0..c{k-1}.
///
/// Ordering is lexicographic with c0 as the LOWEST variable: exponents are
/// compared starting from c{k-1}. With this order a lex Groebner basis
/// eliminates down to a univariate polynomial in c0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }

  std::uint32_t total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// this / o; caller guarantees o divides this.
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
};

struct Term {
  Monomial mono;
  Rat coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted by strictly decreasing monomial (lex, c0 lowest)
/// with no zero coefficients, so the leading term is terms().front() and
/// structural equality is polynomial equality.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MPoly(std::size_t nvars, std::vector<Term> terms);

  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(const Monomial& m, const Rat& c);
  /// Embeds a univariate polynomial as a polynomial in c{index}.
  static MPoly from_upoly(std::size_t nvars, std::size_t index, const UPoly& p);
  /// Parses the text grammar produced by str(), e.g. "3/4*c0^2*c1 - c1 + 7".
  static MPoly parse(std::string_view text, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value when is_constant(); zero otherwise.
  Rat constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rat& leading_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Indices of the variables that occur with a positive exponent.
  std::vector<std::size_t> support() const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  MPoly operator-() const;
  MPoly& operator*=(const Rat& s);
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// this * (c * m), cheaper than a general product.
  MPoly mul_term(const Monomial& m, const Rat& c) const;

  /// Replaces c{var} by value; the variable stays in the ambient space.
  MPoly substitute(std::size_t var, const Rat& value) const;
  /// Full evaluation at a point with nvars() coordinates.
  Rat eval(const std::vector<Rat>& point) const;

  /// Primitive integer normal form: integer coefficients with content 1 and
  /// positive leading coefficient. Throws Error(ZeroPolynomial) on zero.
  MPoly normalized() const;
  /// Scaled so the leading coefficient is 1. Zero stays zero.
  MPoly monic() const;

  /// Converts to a univariate polynomial in c{var}; nullopt if any other
  /// variable occurs.
  std::optional<UPoly> to_upoly(std::size_t var) const;

  /// Text form, e.g. "405*c0^4 + 324*c0^3 - 650*c0^2 - 156*c0 + 77".
  std::string str() const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

/// Ring operation with the variable-count check made explicit. Operators
/// throw the same VariableCountMismatch error.
MPoly mpoly_arith(const MPoly& a, const MPoly& b, ArithOp op);
MPoly mpoly_substitute(const MPoly& p, std::size_t var_index, const Rat& value);
MPoly mpoly_normalize(const MPoly& p);

}  // namespace phaseless

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace phaseless {

using Integer = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and operator
/// leaves the value canonicalized, so equality is structural.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}               // NOLINT(google-explicit-constructor)
  Rat(long long v) : v_(Integer(std::to_string(v))) {}  // NOLINT
  Rat(const Integer& v) : v_(v) {}     // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den);
  Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

  /// Parses "[-]digits[/digits]". Throws Error(ParseError) on malformed input
  /// or a zero denominator.
  static Rat parse(std::string_view text);

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& raw() const { return v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  /// Division by zero throws std::domain_error.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// r^e for e >= 0.
Rat pow(const Rat& r, unsigned e);

}  // namespace phaseless

#include "phaseless/elimination.hpp"

#include "phaseless/error.hpp"

namespace phaseless {

MPoly ATerm::value(const Rat& a0) const {
  return numerator * (Rat(1) / pow(Rat(2) * a0, exponent));
}

Rat ATerm::eval(const Rat& a0, const std::vector<Rat>& c) const {
  return numerator.eval(c) / pow(Rat(2) * a0, exponent);
}

Rat fix_anchor(const Rat& anchor_value, int phase) {
  if (anchor_value.is_zero()) {
    throw Error(ErrorCode::ZeroAnchor, "anchor value must be nonzero");
  }
  if (anchor_value.sign() < 0) {
    throw Error(ErrorCode::InvalidInstance, "anchor value must be positive");
  }
  if (phase != 1 && phase != -1) {
    throw Error(ErrorCode::InvalidInstance, "phase must be +1 or -1");
  }
  return phase > 0 ? anchor_value : -anchor_value;
}

namespace {

// (2 a0)^i * sum_{j=lo}^{hi} a_j a_{i-j}, as a polynomial in c. Every product
// a_j a_{i-j} carries the denominator (2 a0)^i, so the scaled sum is exactly
// the sum of numerator products.
MPoly scaled_convolution(const std::vector<ATerm>& a, std::size_t i,
                         std::size_t lo, std::size_t hi, std::size_t nvars) {
  MPoly sum(nvars);
  for (std::size_t j = lo; j <= hi; ++j) {
    sum += a[j].numerator * a[i - j].numerator;
  }
  return sum;
}

}  // namespace

std::vector<ATerm> a_recursion(const AffineFamily& family, const Rat& a0,
                               int d) {
  if (a0.is_zero()) throw Error(ErrorCode::ZeroAnchor, "a0 must be nonzero");
  if (d < 0) throw Error(ErrorCode::CountMismatch, "negative target degree");
  const auto nv = static_cast<std::size_t>(family.k);
  const Rat two_a0 = Rat(2) * a0;

  std::vector<ATerm> a;
  a.reserve(static_cast<std::size_t>(d) + 1);
  a.push_back({MPoly::constant(nv, a0), 0});
  for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
    // 2 a0 a_i = A_i - sum_{j=1}^{i-1} a_j a_{i-j}; multiply by (2 a0)^(i-1).
    MPoly num = family.coeff(i) * pow(two_a0, static_cast<unsigned>(i - 1));
    if (i >= 2) {
      num -= scaled_convolution(a, i, 1, i - 1, nv) * (Rat(1) / two_a0);
    }
    a.push_back({std::move(num), static_cast<unsigned>(i)});
  }
  return a;
}

PolySystem build_system(const AffineFamily& family,
                        const std::vector<ATerm>& a_terms) {
  if (a_terms.empty()) {
    throw Error(ErrorCode::CountMismatch, "no square-root coefficients given");
  }
  const std::size_t n = a_terms.size() - 1;
  const auto nv = static_cast<std::size_t>(family.k);
  const Rat two_a0 = Rat(2) * a_terms[0].numerator.constant_value();

  PolySystem sys;
  sys.n = static_cast<int>(n);
  sys.k = family.k;
  for (std::size_t i = n + 1; i <= 2 * n; ++i) {
    MPoly eq = scaled_convolution(a_terms, i, i - n, n, nv) -
               family.coeff(i) * pow(two_a0, static_cast<unsigned>(i));
    sys.equations.push_back(eq.is_zero() ? eq : eq.normalized());
  }
  return sys;
}

PolySystem build_extended_system(const AffineFamily& family, const Rat& a0,
                                 int n) {
  const std::vector<ATerm> a = a_recursion(family, a0, 2 * n);
  PolySystem sys;
  sys.n = n;
  sys.k = family.k;
  for (std::size_t i = static_cast<std::size_t>(n) + 1; i < a.size(); ++i) {
    const MPoly& num = a[i].numerator;
    sys.equations.push_back(num.is_zero() ? num : num.normalized());
  }
  return sys;
}

UPoly reconstruct(const std::vector<ATerm>& a_terms, const Rat& a0,
                  const std::vector<Rat>& c) {
  std::vector<Rat> coeffs;
  coeffs.reserve(a_terms.size());
  for (const ATerm& t : a_terms) coeffs.push_back(t.eval(a0, c));
  return UPoly(std::move(coeffs));
}

}  // namespace phaseless

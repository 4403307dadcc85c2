#include "phaseless/roots.hpp"

#include <algorithm>

#include "phaseless/error.hpp"

namespace phaseless {

namespace {

constexpr unsigned long kTrialLimit = 10000;
constexpr unsigned long kRhoIterations = 1UL << 20;

bool probably_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// One nontrivial factor of composite n, or nullopt if the cap is reached.
std::optional<Integer> pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  for (unsigned long seed = 1; seed < 8; ++seed) {
    Integer y = 2, c = seed, g = 1, q = 1, x, ys;
    unsigned long r = 1, iterations = 0;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1 && iterations < kRhoIterations) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long batch = std::min(128UL, r - k);
        for (unsigned long i = 0; i < batch; ++i) {
          y = f(y);
          Integer diff = x - y;
          mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
        iterations += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; step back one at a time.
      do {
        ys = f(ys);
        Integer diff = x - ys;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

void split(const Integer& n, std::vector<Integer>& primes, bool& complete) {
  if (n == 1) return;
  if (probably_prime(n)) {
    primes.push_back(n);
    return;
  }
  const auto d = pollard_brent(n);
  if (!d) {
    primes.push_back(n);
    complete = false;
    return;
  }
  split(*d, primes, complete);
  split(n / *d, primes, complete);
}

// Integer coefficients of a primitive multiple of p.
std::vector<Integer> primitive_integer(const UPoly& p) {
  Integer l = 1;
  for (const Rat& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  std::vector<Integer> out;
  Integer g = 0;
  for (const Rat& c : p.coeffs()) {
    out.push_back(c.num() * (l / c.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  for (Integer& v : out) v /= g;
  return out;
}

// sum a_i num^i den^(n-i) == 0, i.e. P(num/den) = 0.
bool is_root(const std::vector<Integer>& a, const Integer& num,
             const Integer& den) {
  Integer acc = 0, den_pow = 1;
  // Horner on the homogenized form, highest degree first.
  acc = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + a[i] * den_pow;
  }
  return acc == 0;
}

Integer value_at(const std::vector<Integer>& a, long x) {
  Integer acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

bool divides_or_zero(const Integer& d, const Integer& v) {
  if (v == 0) return true;
  if (d == 0) return false;
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

Factorization factorize(const Integer& n_in) {
  if (n_in == 0) throw Error(ErrorCode::ZeroPolynomial, "cannot factor zero");
  Integer n = abs(n_in);
  Factorization out;
  std::vector<Integer> primes;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  bool complete = true;
  split(n, primes, complete);
  std::sort(primes.begin(), primes.end());
  for (const Integer& p : primes) {
    if (!out.factors.empty() && out.factors.back().first == p) {
      ++out.factors.back().second;
    } else {
      out.factors.emplace_back(p, 1);
    }
  }
  out.complete = complete;
  return out;
}

std::vector<Integer> divisors(const Factorization& f) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

RootResult rational_roots(const UPoly& p) {
  if (p.is_zero()) {
    throw Error(ErrorCode::ZeroPolynomial, "every rational is a root of 0");
  }
  RootResult out;
  if (p.degree() == 0) return out;

  // Square-free part shares the roots and has smaller coefficients.
  const UPoly g = UPoly::gcd(p, p.derivative());
  const UPoly sf = g.degree() > 0 ? UPoly::divmod(p, g).first : p;

  std::vector<Integer> a = primitive_integer(sf);
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) {
    out.roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (a.size() > 1) {
    const Factorization fc = factorize(a.front());
    const Factorization fl = factorize(a.back());
    out.complete = fc.complete && fl.complete;
    const std::vector<Integer> nums = divisors(fc);
    const std::vector<Integer> dens = divisors(fl);
    const Integer at_one = value_at(a, 1);
    const Integer at_minus_one = value_at(a, -1);
    for (const Integer& q : dens) {
      for (const Integer& pn : nums) {
        Integer g2;
        mpz_gcd(g2.get_mpz_t(), pn.get_mpz_t(), q.get_mpz_t());
        if (g2 != 1) continue;
        for (int sign : {1, -1}) {
          const Integer num = sign > 0 ? pn : Integer(-pn);
          // A root num/q forces (q - num) | P(1) and (q + num) | P(-1).
          if (!divides_or_zero(Integer(q - num), at_one)) continue;
          if (!divides_or_zero(Integer(q + num), at_minus_one)) continue;
          if (is_root(a, num, q)) out.roots.emplace_back(num, q);
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace phaseless

#include "phaseless/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "phaseless/error.hpp"
#include "phaseless/roots.hpp"

namespace phaseless {

namespace {

MPoly unit_poly(std::size_t nvars) { return MPoly::constant(nvars, Rat(1)); }

// Scale an integer-coefficient polynomial so its content is 1. Keeps the sign.
MPoly drop_content(const MPoly& p) {
  if (p.is_zero()) return p;
  MPoly n = p.normalized();
  return p.leading_coeff().sign() < 0 ? -n : n;
}

// Index of the first element whose leading monomial divides m.
const MPoly* find_reducer(const Monomial& m, const std::vector<MPoly>& by) {
  for (const MPoly& g : by) {
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

}  // namespace

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), g.leading_coeff()) -
         g.mul_term(l / g.leading_monomial(), f.leading_coeff());
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& by) {
  const std::size_t nv = f.nvars();
  if (f.is_zero()) return f;
  // Work with integer coefficients: p * (lc_g / h) - (lc_p / h) * m * g
  // avoids rational coefficient growth. The remainder is scaled along.
  MPoly p = f.normalized();
  std::vector<Term> rem;
  unsigned steps = 0;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const MPoly* g = find_reducer(lt.mono, by);
    if (g == nullptr) {
      rem.push_back(lt);
      p = p - MPoly::monomial(lt.mono, lt.coeff);
      continue;
    }
    const Integer a = lt.coeff.num();
    const Integer b = g->leading_coeff().num();
    Integer h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Rat scale_p(Integer(b / h));
    const Rat scale_g(Integer(a / h));
    const Monomial quotient = lt.mono / g->leading_monomial();
    p = p * scale_p - g->mul_term(quotient, scale_g);
    if (scale_p != Rat(1)) {
      for (Term& t : rem) t.coeff *= scale_p;
    }
    if (++steps % 16 == 0 && rem.empty()) p = drop_content(p);
  }
  return MPoly(nv, std::move(rem));
}

GroebnerBasis buchberger(const std::vector<MPoly>& generators,
                         std::size_t nvars) {
  GroebnerBasis out;
  out.nvars = nvars;

  std::vector<MPoly> g;
  for (const MPoly& p : generators) {
    if (p.nvars() != nvars) {
      throw Error(ErrorCode::VariableCountMismatch,
                  "generator lives in the wrong number of variables");
    }
    if (p.is_zero()) continue;
    if (p.is_constant()) {
      out.elements = {unit_poly(nvars)};
      return out;
    }
    g.push_back(p.normalized());
  }
  if (g.empty()) return out;

  // pending[i][j] (i < j): pair not yet treated.
  std::vector<std::vector<bool>> pending;
  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return static_cast<bool>(pending[j][i]);
  };
  auto add_element = [&](MPoly p) {
    g.push_back(std::move(p));
    pending.emplace_back(g.size() - 1, true);
  };
  {
    std::vector<MPoly> init;
    init.swap(g);
    for (MPoly& p : init) add_element(std::move(p));
  }

  while (true) {
    // Normal selection strategy: smallest lcm, ties by (j, i).
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Monomial best;
    for (std::size_t j = 0; j < g.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!pending[j][i]) continue;
        Monomial l = Monomial::lcm(g[i].leading_monomial(), g[j].leading_monomial());
        if (!found || l < best) {
          found = true;
          best = std::move(l);
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) break;
    pending[bj][bi] = false;

    const Monomial& li = g[bi].leading_monomial();
    const Monomial& lj = g[bj].leading_monomial();
    if (Monomial::coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t l = 0; l < g.size() && !chain; ++l) {
      if (l == bi || l == bj) continue;
      if (g[l].leading_monomial().divides(best) && !is_pending(bi, l) &&
          !is_pending(bj, l)) {
        chain = true;
      }
    }
    if (chain) continue;

    MPoly r = normal_form(s_polynomial(g[bi], g[bj]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      out.elements = {unit_poly(nvars)};
      return out;
    }
    add_element(r.normalized());
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (first occurrence wins among equal leading monomials).
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = g[i].leading_monomial();
      const Monomial& mj = g[j].leading_monomial();
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = normal_form(minimal[i], others).normalized();
  }
  std::sort(minimal.begin(), minimal.end(), [](const MPoly& a, const MPoly& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  out.elements = std::move(minimal);
  return out;
}

GroebnerBasis buchberger(const PolySystem& system) {
  return buchberger(system.equations, static_cast<std::size_t>(system.k));
}

UPoly extract_univariate(const GroebnerBasis& basis, std::size_t var) {
  if (var >= basis.nvars) {
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  }
  for (const MPoly& p : basis.elements) {
    if (p.is_constant()) continue;
    if (auto u = p.to_upoly(var)) return *u;
  }
  throw Error(ErrorCode::NoUnivariate,
              "basis has no univariate element in c" + std::to_string(var) +
                  "; the system is not zero-dimensional");
}

namespace {

void solve_level(const GroebnerBasis& basis, std::size_t var,
                 std::vector<Rat>& partial, TriangularSolution& out) {
  if (basis.is_unit()) return;
  if (var == basis.nvars) {
    out.points.push_back(partial);
    return;
  }
  if (basis.elements.empty()) {
    throw Error(ErrorCode::NonZeroDimensional,
                "variables c" + std::to_string(var) + ".. are unconstrained");
  }
  const UPoly u = extract_univariate(basis, var);
  const RootResult roots = rational_roots(u);
  if (!roots.complete) out.complete = false;
  for (const Rat& r : roots.roots) {
    std::vector<MPoly> substituted;
    substituted.reserve(basis.elements.size());
    for (const MPoly& p : basis.elements) {
      substituted.push_back(p.substitute(var, r));
    }
    partial[var] = r;
    solve_level(buchberger(substituted, basis.nvars), var + 1, partial, out);
  }
}

}  // namespace

TriangularSolution triangular_solve(const GroebnerBasis& basis) {
  TriangularSolution out;
  if (basis.is_unit()) return out;
  std::vector<Rat> partial(basis.nvars);
  solve_level(basis, 0, partial, out);
  return out;
}

}  // namespace phaseless

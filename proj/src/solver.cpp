#include "phaseless/solver.hpp"

#include <algorithm>

#include "phaseless/elimination.hpp"
#include "phaseless/error.hpp"

namespace phaseless {

void validate(const Instance& instance, bool require_solver_range) {
  if (instance.n < 0) {
    throw Error(ErrorCode::InvalidInstance, "degree bound must be >= 0");
  }
  if (instance.points.empty()) {
    throw Error(ErrorCode::InvalidInstance, "instance has no points");
  }
  for (const Point& p : instance.points) {
    if (p.y.sign() < 0) {
      throw Error(ErrorCode::InvalidInstance,
                  "negative absolute value " + p.y.str() + " at x = " + p.x.str());
    }
  }
  try {
    require_distinct_nodes(nodes_of(instance.points));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidInstance, e.what());
  }
  if (require_solver_range) {
    const int k = instance.freedom();
    if (k < 0 || k > instance.n) {
      throw Error(ErrorCode::InvalidInstance,
                  "freedom k = " + std::to_string(k) + " outside [0, n] for n = " +
                      std::to_string(instance.n) + " and " +
                      std::to_string(instance.points.size()) + " points");
    }
  }
}

bool canonical_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

UPoly canonicalize(const UPoly& q) {
  if (q.is_zero() || q.leading().sign() > 0) return q;
  return -q;
}

SolutionSet make_solution_set(std::vector<UPoly> polys, bool complete) {
  SolutionSet out;
  out.complete = complete;
  for (UPoly& p : polys) p = canonicalize(p);
  std::sort(polys.begin(), polys.end(), canonical_less);
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  out.polys = std::move(polys);
  return out;
}

bool verify(const UPoly& q, const Instance& instance) {
  if (q.degree() > instance.n) return false;
  return std::all_of(instance.points.begin(), instance.points.end(),
                     [&](const Point& p) { return abs(q.eval(p.x)) == p.y; });
}

namespace {

// Steps shared by solve() and instance_basis(); fills the trace up to the
// Groebner basis.
void build_basis(const Instance& instance, const ShiftedPoints& shifted,
                 SolveTrace& t) {
  std::vector<Point> squared;
  squared.reserve(shifted.points.size());
  for (const Point& p : shifted.points) squared.push_back({p.x, p.y * p.y});

  const int k = instance.freedom();
  t.family = affine_family(squared, k, 2 * instance.n);
  // One phase suffices: a0 -> -a0 negates every a_i and leaves the system
  // unchanged.
  t.a0 = fix_anchor(shifted.anchor_value, -1);
  t.a_terms = a_recursion(t.family, t.a0, instance.n);
  t.system = build_system(t.family, t.a_terms);
  t.basis = buchberger(t.system);
}

}  // namespace

SolutionSet solve(const Instance& instance, SolveTrace* trace) {
  validate(instance);
  SolveTrace local;
  SolveTrace& t = trace != nullptr ? *trace : local;

  const bool all_zero =
      std::all_of(instance.points.begin(), instance.points.end(),
                  [](const Point& p) { return p.y.is_zero(); });
  if (all_zero) {
    // n + 1 or more zeros force q = 0.
    return make_solution_set({UPoly()});
  }

  t.shift = shift_origin(instance.points);
  build_basis(instance, *t.shift, t);

  TriangularSolution points;
  try {
    points = triangular_solve(t.basis);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoUnivariate) {
      throw Error(ErrorCode::NonZeroDimensional, e.what());
    }
    throw;
  }
  t.roots = points.points;

  std::vector<UPoly> found;
  for (const std::vector<Rat>& c : points.points) {
    const UPoly shifted_q = reconstruct(t.a_terms, t.a0, c);
    // Shifted nodes are x - s, so the original polynomial is q(x - s).
    const UPoly q = shifted_q.shifted(-t.shift->shift);
    if (verify(q, instance)) found.push_back(q);
  }
  return make_solution_set(std::move(found), points.complete);
}

SolutionSet solve(const Instance& instance, int k, SolveTrace* trace) {
  if (k != instance.freedom()) {
    throw Error(ErrorCode::InvalidInstance,
                "requested k = " + std::to_string(k) + " but " +
                    std::to_string(instance.points.size()) +
                    " points give k = " + std::to_string(instance.freedom()));
  }
  return solve(instance, trace);
}

GroebnerBasis instance_basis(const Instance& instance) {
  validate(instance);
  SolveTrace t;
  t.shift = shift_origin(instance.points);
  build_basis(instance, *t.shift, t);
  return t.basis;
}

}  // namespace phaseless

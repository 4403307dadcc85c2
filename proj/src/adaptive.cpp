#include "phaseless/adaptive.hpp"

#include "phaseless/error.hpp"

namespace phaseless {

SeparationBound separation_bound(const std::vector<Point>& points, int n) {
  if (n < 0 || points.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::CountMismatch,
                "adaptive selection needs exactly n + 1 points");
  }
  for (const Point& p : points) {
    if (p.y.sign() < 0) {
      throw Error(ErrorCode::InvalidInstance, "absolute values must be >= 0");
    }
  }
  const std::vector<UPoly> basis = lagrange_basis(nodes_of(points));

  std::vector<UPoly> scaled;
  Integer m = 1;
  for (std::size_t j = 0; j < points.size(); ++j) {
    scaled.push_back(basis[j] * points[j].y);
    for (const Rat& c : scaled.back().coeffs()) {
      mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.den().get_mpz_t());
    }
  }

  Integer best = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    Rat column;
    for (const UPoly& s : scaled) column += abs(s.coeff(k) * Rat(m));
    // M clears every denominator, so the column sum is an integer.
    const Integer twice = 2 * column.num();
    if (twice > best) best = twice;
  }
  return {m, best};
}

Rat select_next_point(const std::vector<Point>& points, int n) {
  return Rat(Integer(separation_bound(points, n).bound + 1));
}

std::pair<UPoly, UPoly> counterexample_pair(const std::vector<Rat>& nodes) {
  if (nodes.empty() || nodes.size() % 2 != 0) {
    throw Error(ErrorCode::OddCount,
                "need an even, nonzero number of nodes, got " +
                    std::to_string(nodes.size()));
  }
  require_distinct_nodes(nodes);
  const std::size_t n = nodes.size() / 2;
  const UPoly first = UPoly::from_roots({nodes.begin(), nodes.begin() + n});
  const UPoly second = UPoly::from_roots({nodes.begin() + n, nodes.end()});
  return {first + second, first - second};
}

}  // namespace phaseless

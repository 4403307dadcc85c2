#include "phaseless/interpolation.hpp"

#include <algorithm>

#include "phaseless/error.hpp"

namespace phaseless {

void require_distinct_nodes(const std::vector<Rat>& xs) {
  std::vector<Rat> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorCode::DuplicateNode, "node " + dup->str() + " repeats");
  }
}

std::vector<Rat> nodes_of(const std::vector<Point>& points) {
  std::vector<Rat> xs;
  xs.reserve(points.size());
  for (const Point& p : points) xs.push_back(p.x);
  return xs;
}

UPoly lagrange_interpolate(const std::vector<Point>& points) {
  if (points.empty()) {
    throw Error(ErrorCode::CountMismatch, "interpolation needs a point");
  }
  const std::vector<Rat> xs = nodes_of(points);
  require_distinct_nodes(xs);

  const std::size_t m = points.size();
  std::vector<Rat> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].y;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  UPoly p = UPoly::constant(dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    p = p * UPoly::linear_root(xs[i]) + UPoly::constant(dd[i]);
  }
  return p;
}

std::vector<UPoly> lagrange_basis(const std::vector<Rat>& xs) {
  require_distinct_nodes(xs);
  const UPoly full = UPoly::from_roots(xs);
  const std::vector<Rat> w =
      xs.size() >= 2 ? barycentric_weights(xs) : std::vector<Rat>{Rat(1)};
  std::vector<UPoly> basis;
  basis.reserve(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    UPoly num = UPoly::divmod(full, UPoly::linear_root(xs[j])).first;
    basis.push_back(num * w[j]);
  }
  return basis;
}

std::vector<Rat> barycentric_weights(const std::vector<Rat>& xs) {
  if (xs.size() < 2) {
    throw Error(ErrorCode::CountMismatch, "barycentric weights need >= 2 nodes");
  }
  require_distinct_nodes(xs);
  std::vector<Rat> w(xs.size(), Rat(1));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rat prod(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i) prod *= xs[i] - xs[j];
    }
    w[i] = Rat(1) / prod;
  }
  return w;
}

MPoly AffineFamily::coeff(std::size_t i) const {
  if (i < coeff_in_c.size()) return coeff_in_c[i];
  return MPoly(static_cast<std::size_t>(k));
}

UPoly AffineFamily::instantiate(const std::vector<Rat>& c) const {
  if (c.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::VariableCountMismatch,
                "parameter vector must have length k");
  }
  std::vector<Rat> out(coeff_in_c.size());
  for (std::size_t i = 0; i < coeff_in_c.size(); ++i) {
    out[i] = coeff_in_c[i].eval(c);
  }
  return UPoly(std::move(out));
}

AffineFamily affine_family(const std::vector<Point>& points, int k,
                           int n_total) {
  if (k < 0 || n_total < k ||
      points.size() != static_cast<std::size_t>(n_total - k + 1)) {
    throw Error(ErrorCode::CountMismatch,
                "affine family of degree " + std::to_string(n_total) +
                    " with freedom " + std::to_string(k) + " needs " +
                    std::to_string(n_total - k + 1) + " points, got " +
                    std::to_string(points.size()));
  }
  AffineFamily fam;
  fam.n_total = n_total;
  fam.k = k;
  fam.base = lagrange_interpolate(points);
  fam.vanisher = UPoly::from_roots(nodes_of(points));

  const auto nv = static_cast<std::size_t>(k);
  fam.coeff_in_c.assign(static_cast<std::size_t>(n_total) + 1, MPoly(nv));
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n_total); ++i) {
    MPoly a = MPoly::constant(nv, fam.base.coeff(i));
    for (std::size_t j = 0; j < nv && j <= i; ++j) {
      const Rat v = fam.vanisher.coeff(i - j);
      if (!v.is_zero()) a += MPoly::variable(nv, j) * v;
    }
    fam.coeff_in_c[i] = std::move(a);
  }
  return fam;
}

ShiftedPoints shift_origin(const std::vector<Point>& points) {
  const Point* anchor = nullptr;
  for (const Point& p : points) {
    if (p.y.is_zero()) continue;
    if (anchor == nullptr) {
      anchor = &p;
      continue;
    }
    const Rat a = abs(p.x), b = abs(anchor->x);
    if (a < b || (a == b && p.x < anchor->x)) anchor = &p;
  }
  if (anchor == nullptr) {
    throw Error(ErrorCode::AllValuesZero, "every sample value is zero");
  }
  ShiftedPoints out{anchor->x, {}, anchor->y};
  out.points.reserve(points.size());
  for (const Point& p : points) out.points.push_back({p.x - out.shift, p.y});
  return out;
}

}  // namespace phaseless

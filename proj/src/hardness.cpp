#include "phaseless/hardness.hpp"

#include <algorithm>

#include "phaseless/error.hpp"

namespace phaseless {

namespace {

void check_signs(const ReductionInstance& inst, const std::vector<int>& b) {
  if (b.size() != inst.phaseless_points.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(inst.phaseless_points.size()) +
                    " signs, got " + std::to_string(b.size()));
  }
  for (int v : b) {
    if (v != 1 && v != -1) {
      throw Error(ErrorCode::LengthMismatch, "signs must be +1 or -1");
    }
  }
}

}  // namespace

PartitionReducer::PartitionReducer(int n, int k, std::vector<Rat> nodes,
                                   std::vector<Rat> exact_values)
    : n_(n), k_(k) {
  if (k < 0 || n < k) {
    throw Error(ErrorCode::CountMismatch, "need 0 <= k <= n");
  }
  if (nodes.size() != static_cast<std::size_t>(n) + 2) {
    throw Error(ErrorCode::CountMismatch,
                "need n + 2 nodes (k exact, n - k + 2 phaseless), got " +
                    std::to_string(nodes.size()));
  }
  if (exact_values.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::CountMismatch, "need exactly k exact values");
  }
  require_distinct_nodes(nodes);

  const auto ku = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < ku; ++i) exact_.push_back({nodes[i], exact_values[i]});
  phaseless_nodes_.assign(nodes.begin() + static_cast<std::ptrdiff_t>(ku),
                          nodes.end());

  const UPoly base = ku > 0 ? lagrange_interpolate(exact_) : UPoly();
  const std::vector<Rat> w = barycentric_weights(phaseless_nodes_);
  for (std::size_t i = 0; i < phaseless_nodes_.size(); ++i) {
    Rat vanish(1);
    for (const Point& e : exact_) vanish *= phaseless_nodes_[i] - e.x;
    const Rat a = w[i] / vanish;
    if (a.is_zero()) throw Error(ErrorCode::ZeroAlpha, "alpha vanished");
    alpha_.push_back(a);
    beta_.push_back(base.eval(phaseless_nodes_[i]) * a);
    s_ += beta_.back();
  }
  if (s_.is_zero()) {
    throw Error(ErrorCode::DegenerateS,
                "S = 0 for these exact values; choose different ones");
  }
}

ReductionInstance PartitionReducer::reduce(const std::vector<Integer>& t) const {
  const std::size_t m = static_cast<std::size_t>(n_ - k_) + 1;
  if (t.size() != m) {
    throw Error(ErrorCode::LengthMismatch,
                "need n - k + 1 = " + std::to_string(m) + " weights, got " +
                    std::to_string(t.size()));
  }
  ReductionInstance inst;
  inst.n = n_;
  inst.k = k_;
  inst.exact_points = exact_;
  inst.alpha = alpha_;
  inst.beta = beta_;
  inst.s = s_;
  for (const Integer& v : t) inst.weights.emplace_back(v);
  inst.weights.push_back(Rat(1, 3));

  for (std::size_t i = 0; i <= m; ++i) {
    const Rat ratio = s_ / alpha_[i];
    inst.phaseless_points.push_back(
        {phaseless_nodes_[i], Rat(3) * abs(inst.weights[i] * ratio)});
    int sign = ratio.sign();  // sign(S alpha_i)
    if (inst.weights[i].sign() < 0) sign = -sign;
    inst.decode_signs.push_back(sign);
  }
  return inst;
}

std::vector<Rat> default_reduction_nodes(int n) {
  std::vector<Rat> nodes;
  for (int i = 0; i <= n + 1; ++i) nodes.emplace_back(i);
  return nodes;
}

ReductionInstance reduce_partition(
    const std::vector<Integer>& t, int n, int k,
    const std::optional<std::vector<Rat>>& nodes,
    const std::optional<std::vector<Rat>>& exact_values) {
  if (k < 0 || n < k || t.size() != static_cast<std::size_t>(n - k) + 1) {
    throw Error(ErrorCode::LengthMismatch,
                "need n - k + 1 weights for n = " + std::to_string(n) +
                    ", k = " + std::to_string(k) + ", got " +
                    std::to_string(t.size()));
  }
  const std::vector<Rat> xs = nodes ? *nodes : default_reduction_nodes(n);
  if (exact_values) return PartitionReducer(n, k, xs, *exact_values).reduce(t);

  std::vector<Rat> ones(static_cast<std::size_t>(k), Rat(1));
  try {
    return PartitionReducer(n, k, xs, ones).reduce(t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateS) throw;
  }
  std::vector<Rat> ramp;
  for (int i = 0; i < k; ++i) ramp.emplace_back(i + 1);
  return PartitionReducer(n, k, xs, ramp).reduce(t);
}

Rat feasibility_residual(const ReductionInstance& inst,
                         const std::vector<int>& b) {
  check_signs(inst, b);
  Rat sum;
  for (std::size_t i = 0; i < b.size(); ++i) {
    sum += Rat(b[i]) * inst.phaseless_points[i].y * inst.alpha[i];
  }
  Rat s;
  for (const Rat& v : inst.beta) s += v;
  return sum - s;
}

std::optional<std::vector<int>> decode_solution(const ReductionInstance& inst,
                                                const std::vector<int>& b) {
  check_signs(inst, b);
  std::vector<int> decoded(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) decoded[i] = b[i] * inst.decode_signs[i];
  if (decoded.back() != 1) return std::nullopt;
  Rat lhs(decoded.back());
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    lhs += Rat(3 * decoded[i]) * inst.weights[i];
  }
  if (lhs != Rat(1)) return std::nullopt;
  decoded.pop_back();
  return decoded;
}

std::vector<std::vector<int>> zero_residual_signs(const ReductionInstance& inst) {
  const std::size_t m = inst.phaseless_points.size();
  if (m >= 8 * sizeof(unsigned long) - 1) {
    throw Error(ErrorCode::TooLarge, "too many sign coordinates to enumerate");
  }
  // Scale u_i = y_i alpha_i and S to a common integer denominator.
  std::vector<Rat> u(m);
  Integer den = inst.s.den();
  for (std::size_t i = 0; i < m; ++i) {
    u[i] = inst.phaseless_points[i].y * inst.alpha[i];
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), u[i].den().get_mpz_t());
  }
  std::vector<Integer> twice(m);
  Integer residual = -(inst.s.num() * (den / inst.s.den()));
  for (std::size_t i = 0; i < m; ++i) {
    const Integer scaled = u[i].num() * (den / u[i].den());
    residual -= scaled;  // start from b = (-1, ..., -1)
    twice[i] = 2 * scaled;
  }

  std::vector<std::vector<int>> out;
  std::vector<int> b(m, -1);
  const unsigned long total = 1UL << m;
  for (unsigned long step = 0;; ++step) {
    if (residual == 0) out.push_back(b);
    if (step + 1 == total) break;
    // Gray code: flip the lowest set bit of step + 1.
    const auto bit = static_cast<std::size_t>(__builtin_ctzl(step + 1));
    if (b[bit] < 0) {
      residual += twice[bit];
    } else {
      residual -= twice[bit];
    }
    b[bit] = -b[bit];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<UPoly> consistent_polynomial(const ReductionInstance& inst,
                                           const std::vector<int>& b) {
  check_signs(inst, b);
  std::vector<Point> pts = inst.exact_points;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const Point& p = inst.phaseless_points[i];
    pts.push_back({p.x, Rat(b[i]) * p.y});
  }
  const UPoly p = lagrange_interpolate(pts);
  const Point& last = inst.phaseless_points.back();
  if (p.eval(last.x) != Rat(b.back()) * last.y) return std::nullopt;
  return p;
}

}  // namespace phaseless

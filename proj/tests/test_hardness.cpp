#include "phaseless/hardness.hpp"
#include "phaseless/oracle.hpp"
#include "support.hpp"

namespace phaseless {
namespace {

using test::R;
using test::rats;

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Brute force: every signing b with sum b_i t_i = 0.
std::vector<std::vector<int>> partition_signings(const std::vector<Integer>& t) {
  std::vector<std::vector<int>> out;
  const std::size_t m = t.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> b(m);
    Integer sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      b[i] = ((mask >> i) & 1U) ? 1 : -1;
      sum += b[i] * t[i];
    }
    if (sum == 0) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> decoded_zero_set(const ReductionInstance& inst) {
  std::vector<std::vector<int>> out;
  for (const auto& b : zero_residual_signs(inst)) {
    const auto d = decode_solution(inst, b);
    EXPECT_TRUE(d.has_value());
    if (d) out.push_back(*d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ReducePartition, OneOneInstance) {
  const ReductionInstance inst = reduce_partition(ints({1, 1}), 3, 2);
  EXPECT_EQ(inst.alpha, rats({"1/4", "-1/6", "1/24"}));
  EXPECT_EQ(inst.s, R("1/8"));
  EXPECT_EQ(inst.weights, rats({"1", "1", "1/3"}));
  EXPECT_EQ(inst.decode_signs, (std::vector<int>{1, -1, 1}));
  ASSERT_EQ(inst.phaseless_points.size(), 3u);
  EXPECT_EQ(inst.phaseless_points[0].y, R("3/2"));
  EXPECT_EQ(inst.phaseless_points[1].y, R("9/4"));
  EXPECT_EQ(inst.phaseless_points[2].y, R("3"));
  EXPECT_EQ(inst.exact_points, test::points({{"0", "1"}, {"1", "1"}}));
  EXPECT_EQ(decoded_zero_set(inst), (std::vector<std::vector<int>>{{-1, 1}, {1, -1}}));
}

TEST(ReducePartition, SolvableAndUnsolvable) {
  const ReductionInstance yes = reduce_partition(ints({3, 5, 8}), 3, 1);
  EXPECT_EQ(yes.s, R("-1/24"));
  EXPECT_EQ(decoded_zero_set(yes), (std::vector<std::vector<int>>{{-1, -1, 1}, {1, 1, -1}}));
  const ReductionInstance no = reduce_partition(ints({2, 3, 7}), 3, 1);
  EXPECT_TRUE(zero_residual_signs(no).empty());
}

// The phaseless data plus the exact points form an ordinary instance whose
// consistent polynomials also hit the exact values.
std::size_t polys_matching_exact(const ReductionInstance& r) {
  Instance inst{r.n, r.phaseless_points};
  for (const Point& e : r.exact_points) inst.points.push_back({e.x, abs(e.y)});
  std::size_t count = 0;
  for (const UPoly& q : oracle_enumerate(inst).polys) {
    for (const UPoly& cand : {q, -q}) {
      bool ok = true;
      for (const Point& e : r.exact_points) ok = ok && cand.eval(e.x) == e.y;
      if (ok) ++count;
    }
  }
  return count;
}

TEST(ReducePartition, OracleAgrees) {
  EXPECT_GE(polys_matching_exact(reduce_partition(ints({3, 5, 8}), 3, 1)), 1u);
  EXPECT_EQ(polys_matching_exact(reduce_partition(ints({2, 3, 7}), 3, 1)), 0u);
  EXPECT_GE(polys_matching_exact(reduce_partition(ints({1, 1}), 3, 2)), 1u);
}

TEST(ReducePartition, Errors) {
  EXPECT_PHASELESS_ERROR(reduce_partition(ints({3, 5, 8}), 4, 1), ErrorCode::LengthMismatch);
  EXPECT_PHASELESS_ERROR(reduce_partition(ints({1, 1}), 3, 2, rats({"0", "1", "2", "3", "3"})),
                         ErrorCode::DuplicateNode);
  EXPECT_PHASELESS_ERROR(reduce_partition(ints({1, 1, 1, 1}), 3, 0), ErrorCode::DegenerateS);
  EXPECT_PHASELESS_ERROR(
      reduce_partition(ints({1, 1}), 3, 2, std::nullopt, rats({"0", "0"})),
      ErrorCode::DegenerateS);
}

TEST(ReducePartition, ExplicitNodesAndValues) {
  const auto inst = reduce_partition(ints({4, 4}), 3, 2, rats({"-1", "1/2", "2", "5", "7"}),
                                     rats({"3", "-2"}));
  EXPECT_EQ(inst.exact_points, test::points({{"-1", "3"}, {"1/2", "-2"}}));
  EXPECT_EQ(decoded_zero_set(inst), (std::vector<std::vector<int>>{{-1, 1}, {1, -1}}));
}

TEST(DecodeSolution, Examples) {
  const ReductionInstance inst = reduce_partition(ints({1, 1}), 3, 2);
  // b is chosen so that b * decode_signs is the stated decoded vector.
  auto encode = [&](std::vector<int> decoded) {
    for (std::size_t i = 0; i < decoded.size(); ++i) decoded[i] *= inst.decode_signs[i];
    return decoded;
  };
  EXPECT_EQ(decode_solution(inst, encode({1, -1, 1})), (std::vector<int>{1, -1}));
  EXPECT_FALSE(decode_solution(inst, encode({1, 1, 1})).has_value());
  for (const auto& d : {std::vector<int>{1, -1, -1}, {-1, 1, -1}, {1, 1, -1}, {-1, -1, -1}}) {
    EXPECT_FALSE(decode_solution(inst, encode(d)).has_value());
  }
  EXPECT_PHASELESS_ERROR(decode_solution(inst, {1, 1}), ErrorCode::LengthMismatch);
  EXPECT_PHASELESS_ERROR(feasibility_residual(inst, {1, 1, 1, 1}), ErrorCode::LengthMismatch);
}

TEST(FeasibilityResidual, Examples) {
  const ReductionInstance inst = reduce_partition(ints({1, 1}), 3, 2);
  std::vector<int> all_plus = inst.decode_signs;  // decodes to (+1, +1, +1)
  EXPECT_EQ(feasibility_residual(inst, all_plus), inst.s * Rat(6));
  EXPECT_EQ(feasibility_residual(inst, all_plus), R("3/4"));

  std::vector<int> valid = inst.decode_signs;
  valid[1] = -valid[1];
  EXPECT_TRUE(feasibility_residual(inst, valid).is_zero());

  const ReductionInstance with_zero = reduce_partition(ints({0, 2, 2}), 3, 1);
  std::vector<int> b = with_zero.decode_signs;
  const Rat before = feasibility_residual(with_zero, b);
  b[0] = -b[0];
  EXPECT_EQ(feasibility_residual(with_zero, b), before);
}

TEST(HardnessProperties, RoundTripUpToLengthEight) {
  // All weight vectors with entries 0..2 and length 1..8, with k = 1.
  for (int len = 1; len <= 8; ++len) {
    const int n = len;
    const PartitionReducer reducer(n, 1, default_reduction_nodes(n), {Rat(1)});
    std::vector<long> t(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<Integer> weights(t.begin(), t.end());
      const ReductionInstance inst = reducer.reduce(weights);
      ASSERT_EQ(decoded_zero_set(inst), partition_signings(weights));
      std::size_t i = 0;
      while (i < t.size() && t[i] == 2) t[i++] = 0;
      if (i == t.size()) break;
      ++t[i];
    }
  }
}

TEST(HardnessProperties, ZeroResidualIffInterpolantExists) {
  test::Rng rng(901);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 5));
    const int k = static_cast<int>(rng.integer(1, n));
    std::vector<Integer> t;
    for (int i = 0; i <= n - k; ++i) t.emplace_back(rng.integer(0, 6));
    const ReductionInstance inst = reduce_partition(t, n, k);
    const std::size_t m = inst.phaseless_points.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<int> b(m);
      for (std::size_t i = 0; i < m; ++i) b[i] = ((mask >> i) & 1U) ? 1 : -1;
      const bool zero = feasibility_residual(inst, b).is_zero();
      const auto poly = consistent_polynomial(inst, b);
      EXPECT_EQ(zero, poly.has_value());
      EXPECT_EQ(zero, decode_solution(inst, b).has_value());
      if (poly) {
        EXPECT_LE(poly->degree(), n);
        for (const Point& e : inst.exact_points) EXPECT_EQ(poly->eval(e.x), e.y);
        for (std::size_t i = 0; i < m; ++i) {
          EXPECT_EQ(poly->eval(inst.phaseless_points[i].x),
                    Rat(b[i]) * inst.phaseless_points[i].y);
        }
      }
    }
  }
}

std::size_t bits(const Rat& r) {
  return mpz_sizeinbase(r.num().get_mpz_t(), 2) + mpz_sizeinbase(r.den().get_mpz_t(), 2);
}

TEST(HardnessProperties, OutputBitSizeIsModest) {
  // Loose check: output bits stay within a fixed multiple of input bits.
  test::Rng rng(902);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 8));
    std::vector<Integer> t;
    std::size_t in_bits = 0;
    for (int i = 0; i < n; ++i) {
      t.emplace_back(rng.integer(1, 1000000));
      in_bits += mpz_sizeinbase(t.back().get_mpz_t(), 2);
    }
    const ReductionInstance inst = reduce_partition(t, n, 1);
    std::size_t out_bits = 0;
    for (const Point& p : inst.phaseless_points) out_bits += bits(p.x) + bits(p.y);
    EXPECT_LE(out_bits, 40 * in_bits + 200);
  }
}

}  // namespace
}  // namespace phaseless

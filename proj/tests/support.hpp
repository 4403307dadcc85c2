#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phaseless/elimination.hpp"
#include "phaseless/error.hpp"
#include "phaseless/interpolation.hpp"
#include "phaseless/mpoly.hpp"
#include "phaseless/rational.hpp"
#include "phaseless/solver.hpp"
#include "phaseless/upoly.hpp"

// Asserts that `stmt` throws phaseless::Error carrying `expected`.
#define EXPECT_PHASELESS_ERROR(stmt, expected)                          \
  do {                                                                  \
    try {                                                               \
      (void)(stmt);                                                     \
      ADD_FAILURE() << "no exception from " #stmt;                      \
    } catch (const ::phaseless::Error& e_) {                            \
      EXPECT_EQ(e_.code(), (expected)) << ::phaseless::to_string(e_.code()); \
    }                                                                   \
  } while (false)

namespace phaseless::test {

inline Rat R(const std::string& text) { return Rat::parse(text); }

inline UPoly P(std::initializer_list<const char*> coeffs) {
  std::vector<Rat> out;
  for (const char* c : coeffs) out.push_back(Rat::parse(c));
  return UPoly(out);
}

inline MPoly M(const std::string& text, std::size_t nvars) {
  return MPoly::parse(text, nvars);
}

inline std::vector<Point> points(
    std::initializer_list<std::pair<const char*, const char*>> xy) {
  std::vector<Point> out;
  for (const auto& [x, y] : xy) out.push_back({R(x), R(y)});
  return out;
}

inline std::vector<Rat> rats(std::initializer_list<const char*> xs) {
  std::vector<Rat> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

// The three worked instances: k = 1, 2, 3.
inline Instance fixture_k1() {
  return {3, points({{"-3", "8"}, {"-2", "2"}, {"-1", "2"}, {"0", "2"},
                     {"1", "4"}, {"2", "2"}})};
}
inline Instance fixture_k2() {
  return {3, points({{"-2", "2"}, {"-1", "2"}, {"0", "2"}, {"1", "4"},
                     {"2", "2"}})};
}
inline Instance fixture_k3() {
  return {4, points({{"-2", "15"}, {"-1", "3"}, {"0", "9"}, {"1", "3"},
                     {"2", "15"}, {"3", "15"}})};
}

// Samples |q| at the given nodes.
inline Instance instance_of(const UPoly& q, const std::vector<Rat>& xs, int n) {
  Instance inst{n, {}};
  for (const Rat& x : xs) inst.points.push_back({x, abs(q.eval(x))});
  return inst;
}

// The objects the solver builds before Groebner, for one phase.
struct Pipeline {
  ShiftedPoints shift;
  AffineFamily family;
  Rat a0;
  std::vector<ATerm> a_terms;
  PolySystem system;
};

inline Pipeline pipeline(const Instance& inst, int phase = -1) {
  Pipeline p;
  p.shift = shift_origin(inst.points);
  std::vector<Point> squared;
  for (const Point& pt : p.shift.points) squared.push_back({pt.x, pt.y * pt.y});
  p.family = affine_family(squared, inst.freedom(), 2 * inst.n);
  p.a0 = fix_anchor(p.shift.anchor_value, phase);
  p.a_terms = a_recursion(p.family, p.a0, inst.n);
  p.system = build_system(p.family, p.a_terms);
  return p;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  Rat rational(long range, long max_den) {
    return Rat(integer(-range, range), integer(1, max_den));
  }

  // Polynomial of exact degree `deg` (nonzero leading coefficient).
  UPoly poly(int deg, long range, long max_den) {
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rational(range, max_den));
    while (deg >= 0 && c.back().is_zero()) c.back() = rational(range, max_den);
    return UPoly(c);
  }

  std::vector<Rat> distinct_integers(std::size_t count, long lo, long hi) {
    std::vector<long> pool;
    for (long v = lo; v <= hi; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), gen_);
    std::vector<Rat> out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(pool[i]);
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace phaseless::test

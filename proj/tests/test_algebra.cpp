#include <stdexcept>

#include "support.hpp"

namespace phaseless {
namespace {

using test::M;
using test::P;
using test::R;

TEST(Rat, CanonicalForm) {
  const Rat r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rat(0, 5).den(), 1);
  EXPECT_EQ((R("1/3") + R("1/6")).str(), "1/2");
  EXPECT_EQ((R("2/3") * R("3/2")).str(), "1");
}

TEST(Rat, ParsePrintRoundTrip) {
  for (const char* s : {"0", "3", "-59/4", "22715/16", "-1",
                        "123456789012345678901234567890/11"}) {
    EXPECT_EQ(R(s).str(), s);
  }
  EXPECT_EQ(R("10/4").str(), "5/2");
  EXPECT_EQ(R("-0").str(), "0");
}

TEST(Rat, ParseRejectsMalformed) {
  for (const char* s : {"", "-", "1/", "/2", "1/0", "a", "1.5", "--1", "1/-2",
                        " 1", "1 "}) {
    EXPECT_PHASELESS_ERROR(R(s), ErrorCode::ParseError);
  }
}

TEST(Rat, DivisionByZeroThrows) {
  EXPECT_THROW(R("1") / R("0"), std::domain_error);
}

TEST(Rat, PowAndOrder) {
  EXPECT_EQ(pow(R("-2/3"), 3), R("-8/27"));
  EXPECT_EQ(pow(R("5"), 0), R("1"));
  EXPECT_LT(R("-1/2"), R("-1/3"));
  EXPECT_EQ(abs(R("-7/2")), R("7/2"));
}

TEST(UPoly, Eval) {
  EXPECT_EQ(upoly_eval(P({"1", "0", "1"}), R("2")), R("5"));
  EXPECT_EQ(upoly_eval(UPoly(), R("7")), R("0"));
  EXPECT_EQ(upoly_eval(P({"-126", "85", "-21", "2"}), R("1")), R("-60"));
}

TEST(UPoly, Mul) {
  EXPECT_EQ(upoly_mul(P({"1", "1"}), P({"-1", "1"})), P({"-1", "0", "1"}));
  EXPECT_EQ(upoly_mul(upoly_mul(P({"-1", "1"}), P({"-2", "1"})), P({"-3", "1"})),
            P({"-6", "11", "-6", "1"}));
  EXPECT_TRUE(upoly_mul(UPoly(), P({"3", "0", "0", "0", "0", "1"})).is_zero());
}

TEST(UPoly, TrimsAndDegree) {
  EXPECT_EQ(P({"1", "2", "0", "0"}).degree(), 1);
  EXPECT_EQ(P({"0"}).degree(), -1);
  EXPECT_TRUE(P({"0", "0"}).is_zero());
}

TEST(UPoly, DivmodGcdShift) {
  const UPoly a = P({"-6", "11", "-6", "1"});
  const auto [q, r] = UPoly::divmod(a, P({"-1", "1"}));
  EXPECT_EQ(q, P({"6", "-5", "1"}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(UPoly::gcd(a, P({"2", "-3", "1"})), P({"2", "-3", "1"}));
  // (x+1)^2 shifted by 1 is (x+2)^2.
  EXPECT_EQ(P({"1", "2", "1"}).shifted(R("1")), P({"4", "4", "1"}));
  EXPECT_EQ(P({"1", "2", "1"}).derivative(), P({"2", "2"}));
  EXPECT_EQ(P({"-2", "-4", "1", "1"}).str(), "x^3 + x^2 - 4*x - 2");
}

TEST(UPoly, FromRoots) {
  EXPECT_EQ(UPoly::from_roots(test::rats({"1", "2", "3"})), P({"-6", "11", "-6", "1"}));
}

TEST(Monomial, LexWithC0Lowest) {
  const Monomial c1 = Monomial::variable(2, 1);
  const Monomial c0_5 = Monomial::variable(2, 0, 5);
  EXPECT_GT(c1, c0_5);
  EXPECT_GT(Monomial({1, 1}), c1);
  EXPECT_EQ(Monomial::lcm(Monomial({2, 0}), Monomial({1, 3})), Monomial({2, 3}));
  EXPECT_TRUE(Monomial::coprime(Monomial({2, 0}), Monomial({0, 3})));
}

TEST(MPoly, Arith) {
  EXPECT_EQ(mpoly_arith(M("c0 + 1", 1), M("c0 - 1", 1), ArithOp::mul),
            M("c0^2 - 1", 1));
  EXPECT_TRUE(mpoly_arith(M("3*c0 + c1", 2), M("3*c0 + c1", 2), ArithOp::sub).is_zero());
  EXPECT_EQ(mpoly_arith(M("c0 + 2", 2), M("c0^2 + 4*c0 - 4*c1 - 4", 2), ArithOp::mul),
            M("c0^3 + 6*c0^2 - 4*c0*c1 + 4*c0 - 8*c1 - 8", 2));
  EXPECT_EQ(mpoly_arith(M("c0", 1), M("c0", 1), ArithOp::add), M("2*c0", 1));
}

TEST(MPoly, VariableCountMismatch) {
  EXPECT_PHASELESS_ERROR(mpoly_arith(M("c0", 1), M("c0", 2), ArithOp::add),
                         ErrorCode::VariableCountMismatch);
  EXPECT_PHASELESS_ERROR(M("c0", 1) * M("c1", 2), ErrorCode::VariableCountMismatch);
}

TEST(MPoly, Substitute) {
  EXPECT_TRUE(mpoly_substitute(M("c0 - 2", 1), 0, R("2")).is_zero());
  const MPoly s = mpoly_substitute(M("c0*c1 + c1", 2), 0, R("1"));
  EXPECT_EQ(s, M("2*c1", 2));
  EXPECT_EQ(s.nvars(), 2u);
  EXPECT_TRUE(mpoly_substitute(M("405*c0^4 + 324*c0^3 - 650*c0^2 - 156*c0 + 77", 1),
                               0, R("1"))
                  .is_zero());
  EXPECT_PHASELESS_ERROR(mpoly_substitute(M("c0", 1), 1, R("1")),
                         ErrorCode::IndexOutOfRange);
}

TEST(MPoly, Normalize) {
  EXPECT_EQ(mpoly_normalize(M("1/2*c0 - 1", 1)), M("c0 - 2", 1));
  EXPECT_EQ(mpoly_normalize(M("-3*c1 + 6", 2)), M("c1 - 2", 2));
  EXPECT_EQ(mpoly_normalize(M("116/7371*c0^3 + 788/2457*c0^2 + 92/63*c0 + c2 - 2945/1053", 3)),
            M("116*c0^3 + 2364*c0^2 + 10764*c0 + 7371*c2 - 20615", 3));
  EXPECT_PHASELESS_ERROR(mpoly_normalize(MPoly(2)), ErrorCode::ZeroPolynomial);
}

TEST(MPoly, ParseStrRoundTrip) {
  for (const char* s : {"405*c0^4 + 324*c0^3 - 650*c0^2 - 156*c0 + 77",
                        "3/4*c0^2*c1 - c1 + 7", "-c2", "0", "c0*c1*c2 - 1/2"}) {
    EXPECT_EQ(M(s, 3).str(), s);
  }
  EXPECT_PHASELESS_ERROR(M("c3", 3), ErrorCode::ParseError);
  EXPECT_PHASELESS_ERROR(M("2**c0", 1), ErrorCode::ParseError);
}

TEST(MPoly, LeadingTermAndDegrees) {
  const MPoly p = M("c0^5 + c1 + 1", 2);
  EXPECT_EQ(p.leading_monomial(), Monomial::variable(2, 1));
  EXPECT_EQ(p.total_degree(), 5u);
  EXPECT_EQ(p.degree_in(0), 5u);
  EXPECT_TRUE(p.involves(1));
  EXPECT_FALSE(p.to_upoly(0).has_value());
  EXPECT_EQ(*M("c0^2 - 3", 2).to_upoly(0), P({"-3", "0", "1"}));
}

MPoly random_mpoly(test::Rng& rng, std::size_t nvars) {
  std::vector<Term> terms;
  const long count = rng.integer(0, 4);
  for (long t = 0; t < count; ++t) {
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      m[v] = static_cast<std::uint32_t>(rng.integer(0, 2));
    }
    terms.push_back({m, rng.rational(5, 3)});
  }
  return MPoly(nvars, terms);
}

TEST(AlgebraProperties, RingAxioms) {
  test::Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const MPoly a = random_mpoly(rng, 2), b = random_mpoly(rng, 2),
                c = random_mpoly(rng, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(AlgebraProperties, EvalIsMultiplicative) {
  test::Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const UPoly a = rng.poly(static_cast<int>(rng.integer(0, 5)), 9, 4);
    const UPoly b = rng.poly(static_cast<int>(rng.integer(0, 5)), 9, 4);
    const Rat x = rng.rational(7, 5);
    EXPECT_EQ(upoly_eval(upoly_mul(a, b), x), upoly_eval(a, x) * upoly_eval(b, x));
    EXPECT_EQ(upoly_mul(a, b).degree(), a.degree() + b.degree());
  }
}

TEST(AlgebraProperties, SubstituteCommutesWithArith) {
  test::Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const MPoly a = random_mpoly(rng, 3), b = random_mpoly(rng, 3);
    const auto var = static_cast<std::size_t>(rng.integer(0, 2));
    const Rat v = rng.rational(4, 3);
    for (ArithOp op : {ArithOp::add, ArithOp::sub, ArithOp::mul}) {
      EXPECT_EQ(mpoly_substitute(mpoly_arith(a, b, op), var, v),
                mpoly_arith(mpoly_substitute(a, var, v), mpoly_substitute(b, var, v), op));
    }
  }
}

TEST(AlgebraProperties, CanonicalAfterArithmetic) {
  test::Rng rng(104);
  Rat acc(1);
  for (int i = 0; i < 500; ++i) {
    const Rat r = rng.rational(50, 50);
    acc = (i % 3 == 0) ? acc + r : (r.is_zero() ? acc : acc * r);
    EXPECT_GT(acc.den(), 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), acc.num().get_mpz_t(), acc.den().get_mpz_t());
    EXPECT_EQ(g, acc.is_zero() ? acc.den() : Integer(1));
  }
}

}  // namespace
}  // namespace phaseless

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "gmconn/error.hpp"
#include "gmconn/multipoly.hpp"
#include "gmconn/pathpoly.hpp"
#include "gmconn/ratfunc.hpp"
#include "gmconn/rational.hpp"

namespace gmconn {
namespace {

MultiPoly P(const char* text, int n) { return parse_ratfunc(text, n).numer(); }

MultiPoly random_poly(std::mt19937& rng, int n, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> count(0, max_terms);
  MultiPoly out(n);
  for (int k = count(rng); k > 0; --k) {
    MultiPoly term = MultiPoly::constant(n, Rational(coeff(rng)));
    for (int v = 0; v < n; ++v) term *= MultiPoly::variable(n, v).pow(static_cast<unsigned>(exp(rng) / 2));
    out += term;
  }
  return out;
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("+12")), "12");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(MultiPoly, Cancellation) {
  EXPECT_EQ(P("l1 + l2", 2) + P("-l2", 2), P("l1", 2));
}

TEST(MultiPoly, DifferenceOfSquares) {
  const MultiPoly prod = P("l1 + l2", 2) * P("l1 - l2", 2);
  EXPECT_EQ(prod.to_string(), "l1^2 - l2^2");
}

TEST(MultiPoly, ZeroAnnihilates) {
  const MultiPoly prod = MultiPoly(3) * P("l3", 3);
  EXPECT_TRUE(prod.is_zero());
  EXPECT_TRUE(prod.terms().empty());
}

TEST(MultiPoly, MismatchedVariableCount) {
  EXPECT_THROW(P("l1", 2) + P("l1", 3), InvalidInput);
  EXPECT_THROW(P("l1", 2) * P("l1", 3), InvalidInput);
}

TEST(MultiPoly, GradedLexOrder) {
  EXPECT_EQ(P("l3 + l2^2 + l1*l3 + 1 + l1", 3).to_string(), "l1*l3 + l2^2 + l1 + l3 + 1");
  EXPECT_EQ(P("3/2*l1 - 2*l1*l2", 2).to_string(), "-2*l1*l2 + 3/2*l1");
}

TEST(MultiPoly, RingAxiomsRandomized) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = random_poly(rng, 3, 4, 4);
    const MultiPoly b = random_poly(rng, 3, 4, 4);
    const MultiPoly c = random_poly(rng, 3, 4, 4);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Gcd, DifferenceOfSquaresFactor) {
  EXPECT_EQ(gcd(P("l1^2 - l2^2", 2), P("l1 + l2", 2)), P("l1 + l2", 2));
}

TEST(Gcd, WithZeroIsMonic) {
  EXPECT_EQ(gcd(P("2*l1 + 4*l2", 2), MultiPoly(2)), P("l1 + 2*l2", 2));
  EXPECT_EQ(gcd(MultiPoly(2), P("-3*l2", 2)), P("l2", 2));
}

TEST(Gcd, DisjointVariables) {
  EXPECT_TRUE(gcd(P("l1*l2", 3), P("l3", 3)).is_one());
}

TEST(Gcd, RandomizedAgainstConstructedFactor) {
  // Oracle: g divides gcd(g*a, g*b); and gcd divides both inputs.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const MultiPoly g = random_poly(rng, 3, 3, 2);
    const MultiPoly a = random_poly(rng, 3, 3, 3);
    const MultiPoly b = random_poly(rng, 3, 3, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const MultiPoly x = g * a;
    const MultiPoly y = g * b;
    const MultiPoly d = gcd(x, y);
    MultiPoly q(3);
    EXPECT_TRUE(try_divide(d, g, q)) << d.to_string() << " vs " << g.to_string();
    EXPECT_TRUE(try_divide(x, d, q));
    EXPECT_TRUE(try_divide(y, d, q));
    EXPECT_EQ(d.leading_coeff(), 1);
  }
}

TEST(RatFunc, NormalizeCancelsCommonFactor) {
  const RatFunc f = ratfunc_normalize(P("l2^2 + l2*l3", 3), P("l2*l1 + l2^2 + l2*l3", 3));
  EXPECT_EQ(f.to_string(), "(l2 + l3)/(l1 + l2 + l3)");
}

TEST(RatFunc, AlreadyCanonical) {
  const RatFunc f = ratfunc_normalize(P("-l3", 3), P("l1 + l2 + l3", 3));
  EXPECT_EQ(f.numer(), P("-l3", 3));
  EXPECT_EQ(f.denom(), P("l1 + l2 + l3", 3));
  EXPECT_EQ(f.to_string(), "(-l3)/(l1 + l2 + l3)");
}

TEST(RatFunc, ZeroNumerator) {
  const RatFunc f = ratfunc_normalize(MultiPoly(2), P("l1 + l2", 2));
  EXPECT_TRUE(f.is_zero());
  EXPECT_TRUE(f.denom().is_one());
  EXPECT_THROW(ratfunc_normalize(P("l1", 2), MultiPoly(2)), ArithmeticError);
}

TEST(RatFunc, MonicDenominator) {
  const RatFunc f = parse_ratfunc("l1/(2*l2 - 4*l1)", 2);
  EXPECT_EQ(f.denom().leading_coeff(), 1);
  EXPECT_EQ(f.to_string(), "(-1/4*l1)/(l1 - 1/2*l2)");
}

TEST(RatFunc, NormalizeIdempotentAndScaleInvariant) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const MultiPoly p = random_poly(rng, 3, 3, 3);
    const MultiPoly q = random_poly(rng, 3, 3, 3);
    const MultiPoly r = random_poly(rng, 3, 2, 2);
    if (q.is_zero() || r.is_zero()) continue;
    const RatFunc f = ratfunc_normalize(p, q);
    EXPECT_EQ(ratfunc_normalize(f.numer(), f.denom()), f);
    EXPECT_EQ(ratfunc_normalize(p * r, q * r), f);
  }
}

TEST(RatFunc, FieldOperations) {
  const RatFunc a = parse_ratfunc("l1/(l1 + l2)", 2);
  const RatFunc b = parse_ratfunc("l2/(l1 + l2)", 2);
  EXPECT_TRUE((a + b - RatFunc::constant(2, 1)).is_zero());
  EXPECT_EQ((a / b).to_string(), "(l1)/(l2)");
  EXPECT_EQ(a * (RatFunc::constant(2, 1) / a), RatFunc::constant(2, 1));
  EXPECT_THROW(a / RatFunc(2), ArithmeticError);
}

TEST(RatFunc, EvaluateExample) {
  const RatFunc f = parse_ratfunc("(-l3)/(l1 + l2 + l3)", 3);
  const std::vector<Rational> w{Rational(1, 2), Rational(1, 3), Rational(1, 5)};
  // Hand arithmetic: (-1/5) / (31/30).
  EXPECT_EQ(f.evaluate(w), Rational(-6, 31));
}

TEST(RatFunc, EvaluateConstantAndVanishingDenominator) {
  const std::vector<Rational> w{Rational(1), Rational(-1)};
  EXPECT_EQ(RatFunc::constant(2, 7).evaluate(w), 7);
  const RatFunc f = parse_ratfunc("1/(l1 + l2)", 2);
  try {
    f.evaluate(w);
    FAIL() << "expected ArithmeticError";
  } catch (const ArithmeticError& e) {
    EXPECT_NE(std::string(e.what()).find("l1 + l2"), std::string::npos);
  }
}

TEST(RatFunc, EvaluateIsHomomorphism) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly p1 = random_poly(rng, 3, 3, 3), q1 = random_poly(rng, 3, 3, 3);
    const MultiPoly p2 = random_poly(rng, 3, 3, 3), q2 = random_poly(rng, 3, 3, 3);
    if (q1.is_zero() || q2.is_zero()) continue;
    const RatFunc f(p1, q1), g(p2, q2);
    std::vector<Rational> w(3);
    for (auto& x : w) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    if (f.denom().evaluate(w) == 0 || g.denom().evaluate(w) == 0) continue;
    EXPECT_EQ((f * g).evaluate(w), f.evaluate(w) * g.evaluate(w));
    EXPECT_EQ((f + g).evaluate(w), f.evaluate(w) + g.evaluate(w));
  }
}

TEST(RatFunc, ParseRejectsUnknownVariables) {
  EXPECT_THROW(parse_ratfunc("l4", 3), ParseError);
  EXPECT_THROW(parse_ratfunc("l0", 3), ParseError);
  EXPECT_THROW(parse_ratfunc("x", 3), ParseError);
  EXPECT_THROW(parse_ratfunc("(l1", 3), ParseError);
  EXPECT_THROW(parse_ratfunc("l1/0", 3), ParseError);
}

TEST(RatFunc, CanonicalTextRoundTrip) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 80; ++trial) {
    const MultiPoly p = random_poly(rng, 4, 4, 3), q = random_poly(rng, 4, 3, 3);
    if (q.is_zero()) continue;
    const RatFunc f(p, q);
    EXPECT_EQ(parse_ratfunc(f.to_string(), 4), f) << f.to_string();
  }
}

TEST(PathPoly, OrdT) {
  EXPECT_EQ(ord_t(parse_pathpoly("3*t^2 + t^3")), 2);
  EXPECT_EQ(ord_t(PathPoly(Rational(5))), 0);
  EXPECT_FALSE(ord_t(PathPoly()).has_value());
}

TEST(PathPoly, OrdAdditiveUnderProducts) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_path = [&] {
    std::vector<Rational> c(5);
    for (auto& x : c) x = coeff(rng);
    return PathPoly(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const PathPoly p = random_path(), q = random_path();
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ(*ord_t(p * q), *ord_t(p) + *ord_t(q));
  }
}

TEST(PathPoly, ParseEvaluateDivide) {
  const PathPoly p = parse_pathpoly("1 - 2*t + t^2");
  EXPECT_EQ(p.to_string(), "t^2 - 2*t + 1");
  EXPECT_EQ(p.evaluate(Rational(1)), 0);
  EXPECT_EQ(divide_exact(p, parse_pathpoly("t - 1")), parse_pathpoly("t - 1"));
  EXPECT_THROW(divide_exact(p, parse_pathpoly("t")), ArithmeticError);
  EXPECT_EQ(parse_pathpoly("3/4"), PathPoly(Rational(3, 4)));
  EXPECT_THROW(parse_pathpoly("1/t"), ParseError);
  EXPECT_EQ(ord_t(parse_pathpoly("t*(t - 3)")), 1);
}

}  // namespace
}  // namespace gmconn

#include <gtest/gtest.h>

#include <random>

#include "kspec/corpus.hpp"
#include "kspec/poly.hpp"

using namespace kspec;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Rational> p;
  for (int i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

}  // namespace

TEST(Parse, TermsAndCoefficients) {
  const auto f = parse_poly("x^2*y^2 + z^4", xyz);
  EXPECT_EQ(f.num_vars(), 3);
  EXPECT_EQ(f.degree(), 4);
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.terms().at({2, 2, 0}), 1);
  EXPECT_EQ(f.terms().at({0, 0, 4}), 1);

  const auto g = parse_poly("  -3/2*x*y +x^2 - 2 * y^2 ", {"x", "y"});
  EXPECT_EQ(g.terms().at({1, 1}), Rational(-3, 2));
  EXPECT_EQ(g.terms().at({2, 0}), 1);
  EXPECT_EQ(g.terms().at({0, 2}), -2);
}

TEST(Parse, CollectsLikeTermsAndDropsCancellations) {
  const auto f = parse_poly("x*y + y*x + x^2 - x^2 + y^2", {"x", "y"});
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.terms().at({1, 1}), 2);
}

TEST(Parse, Errors) {
  auto kind_of = [](const std::string& text, const std::vector<std::string>& vars) {
    try {
      parse_poly(text, vars);
    } catch (const ParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of("x^2 + y", {"x", "y"}), static_cast<int>(ParseError::Kind::NotHomogeneous));
  EXPECT_EQ(kind_of("x^2 + w^2", {"x", "y"}), static_cast<int>(ParseError::Kind::UnknownVariable));
  EXPECT_EQ(kind_of("x^", {"x", "y"}), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of("x**y", {"x", "y"}), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of("(x+y)^2", {"x", "y"}), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of("x - x", {"x", "y"}), static_cast<int>(ParseError::Kind::NotHomogeneous));
  EXPECT_EQ(kind_of("3", {"x", "y"}), static_cast<int>(ParseError::Kind::NotHomogeneous));
  EXPECT_EQ(kind_of("x^2", {"x"}), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of("x^2", {"x", "x"}), static_cast<int>(ParseError::Kind::Syntax));
  EXPECT_EQ(kind_of("x/0", {"x", "y"}), static_cast<int>(ParseError::Kind::Syntax));
}

TEST(Parse, RoundTripThroughCanonicalText) {
  for (const auto& e : builtin_corpus()) {
    const auto vars = split_vars(e.vars);
    const auto f = parse_poly(e.poly, vars);
    EXPECT_EQ(parse_poly(f.to_string(vars), vars), f) << e.name;
  }
  EXPECT_EQ(parse_poly("z^4 + y^2*x^2", xyz).to_string(xyz), "x^2*y^2 + z^4");
}

TEST(Poly, EulerIdentityAtRandomPoints) {
  std::mt19937_64 rng(7);
  for (const auto& e : builtin_corpus()) {
    const auto vars = split_vars(e.vars);
    const auto f = parse_poly(e.poly, vars);
    const auto parts = f.partials();
    for (int trial = 0; trial < 3; ++trial) {
      const auto p = random_point(rng, f.num_vars());
      Rational lhs = 0;
      for (int i = 0; i < f.num_vars(); ++i) lhs += p[i] * parts[i].evaluate(p);
      EXPECT_EQ(lhs, f.degree() * f.evaluate(p)) << e.name;
    }
  }
}

TEST(Poly, PartialsHaveDegreeDMinusOne) {
  const auto f = parse_poly("x^3 + y^3", xyz);
  const auto parts = f.partials();
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], parse_poly("3*x^2", xyz));
  EXPECT_EQ(parts[1], parse_poly("3*y^2", xyz));
  EXPECT_TRUE(parts[2].is_zero());
  EXPECT_EQ(parts[2].degree(), 2);
}

TEST(Poly, ProductAndSumAgreeWithEvaluation) {
  std::mt19937_64 rng(11);
  const auto f = parse_poly("x^2 - 3*y*z", xyz), g = parse_poly("x + 2/5*y - z", xyz);
  const auto h = parse_poly("x*y + z^2", xyz);
  for (int t = 0; t < 5; ++t) {
    const auto p = random_point(rng, 3);
    EXPECT_EQ((f * g).evaluate(p), f.evaluate(p) * g.evaluate(p));
    EXPECT_EQ((f + h).evaluate(p), f.evaluate(p) + h.evaluate(p));
  }
  EXPECT_THROW(f + g, std::invalid_argument);
}

TEST(Poly, PrimitiveClearsDenominatorsAndContent) {
  EXPECT_EQ(parse_poly("2/3*x^2 - 4/3*y^2", {"x", "y"}).primitive(), parse_poly("x^2 - 2*y^2", {"x", "y"}));
  EXPECT_EQ(parse_poly("-6*x*y + 4*y^2", {"x", "y"}).primitive(), parse_poly("3*x*y - 2*y^2", {"x", "y"}));
}

TEST(Poly, ZeroPolynomialIsRejected) {
  EXPECT_THROW(HomogeneousPoly(2, TermMap{}), std::invalid_argument);
  EXPECT_THROW(HomogeneousPoly(2, TermMap{{{1, 1}, 1}, {{1, 0}, 1}}), std::invalid_argument);
}

TEST(LinearForm, DeterministicAndInRange) {
  const auto a = generic_linear_form(4, 123), b = generic_linear_form(4, 123), c = generic_linear_form(4, 124);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (auto v : a) {
    EXPECT_GE(v, 1);
    EXPECT_LE(v, 1 << 20);
  }
}

TEST(Helpers, SplitVarsAndRationals) {
  EXPECT_EQ(split_vars("x, y,z"), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_THROW(split_vars("x,,y"), ParseError);
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2"), -2);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("a"), ParseError);
  EXPECT_EQ(rational_to_string(Rational(3, 4)), "3/4");
  EXPECT_EQ(rational_to_string(Rational(2)), "2");
}

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "qcurves/poly.hpp"
#include "qcurves/quadric.hpp"

using qcurves::MultiPoly;
using qcurves::Rational;

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kUV = {"u", "v"};

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<long> coef(-9, 9);
  MultiPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    qcurves::Exponents e(vars.size());
    for (auto& x : e) x = exp(rng);
    p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST(MultiPoly, CanonicalText) {
  const auto& v = qcurves::plucker_variables();
  const auto k = MultiPoly::parse("v3m3*v1m1 + v31*vm1m3 - v3m1*v1m3", v);
  EXPECT_EQ(k.to_string(), "v31*vm1m3 - v3m1*v1m3 + v3m3*v1m1");
  EXPECT_EQ(MultiPoly::parse("-3*v1m1 + v3m3", v).to_string(), "v3m3 - 3*v1m1");
  EXPECT_EQ(MultiPoly::parse("1/2*x^2 - 2/3", kXY).to_string(), "1/2*x^2 - 2/3");
  EXPECT_EQ(MultiPoly(kXY).to_string(), "0");
}

TEST(MultiPoly, ParseHandlesPowersParenthesesAndLaurentTerms) {
  const auto p = MultiPoly::parse("(x - y)^2", kXY);
  EXPECT_EQ(p, MultiPoly::parse("x^2 - 2*x*y + y^2", kXY));
  const auto q = MultiPoly::parse("3*a^-1*v^3", {"v", "a"});
  EXPECT_EQ(q.coefficient({3, -1}), Rational(3));
  EXPECT_THROW(MultiPoly::parse("x + z", kXY), std::invalid_argument);
  EXPECT_THROW(MultiPoly::parse("x +", kXY), std::invalid_argument);
  EXPECT_THROW(MultiPoly::parse("(x", kXY), std::invalid_argument);
}

TEST(MultiPoly, NoZeroCoefficientsAreStored) {
  auto p = MultiPoly::parse("x*y + 2*x", kXY);
  p -= MultiPoly::parse("x*y", kXY);
  EXPECT_EQ(p.size(), 1U);
  p.add_term({1, 0}, Rational(-2));
  EXPECT_TRUE(p.is_zero());
}

TEST(Substitute, AnnihilationExample) {
  const auto xy = MultiPoly::parse("x*y", kXY);
  const std::map<std::string, MultiPoly> sub = {{"x", MultiPoly::parse("u^3", kUV)}, {"y", MultiPoly(kUV)}};
  EXPECT_TRUE(xy.substitute(sub).is_zero());
}

TEST(Substitute, TwistedCubicIntoKleinFormVanishes) {
  const auto c = qcurves::ParametrizedCurve::parse(kUV, 2, {"u^3", "u^2*v", "3*u*v^2", "u*v^2", "3*v^3", "0"});
  EXPECT_TRUE(c.pull_back(qcurves::klein_form()).is_zero());
  // The two surviving products cancel.
  EXPECT_EQ(c.pull_back(qcurves::plucker_form("-v3m1*v1m3")).to_string(), "-3*u^2*v^4");
  EXPECT_EQ(c.pull_back(qcurves::plucker_form("v3m3*v1m1")).to_string(), "3*u^2*v^4");
}

TEST(Substitute, MissingVariableIsNamed) {
  const auto xy = MultiPoly::parse("x*y + 1", kXY);
  try {
    xy.substitute({{"x", MultiPoly::variable(kUV, "u")}});
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos);
  }
}

TEST(Substitute, NegativePowerNeedsMonomialImage) {
  const auto p = MultiPoly::parse("a^-1", {"a"});
  EXPECT_EQ(p.substitute({{"a", MultiPoly::parse("2*u", {"u"})}}), MultiPoly::parse("1/2*u^-1", {"u"}));
  EXPECT_THROW(p.substitute({{"a", MultiPoly::parse("u + 1", {"u"})}}), std::domain_error);
}

TEST(SubstituteProperty, IdentityAssignmentIsIdentity) {
  std::mt19937 rng(11);
  const std::map<std::string, MultiPoly> id = {{"x", MultiPoly::variable(kXY, "x")}, {"y", MultiPoly::variable(kXY, "y")}};
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng, kXY, 4, 6);
    EXPECT_EQ(p.substitute(id), p);
  }
}

TEST(SubstituteProperty, CommutesWithEvaluation) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> val(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng, kXY, 3, 5);
    const auto fx = random_poly(rng, kUV, 2, 3);
    const auto fy = random_poly(rng, kUV, 2, 3);
    const std::vector<Rational> pt = {Rational(val(rng)), Rational(val(rng))};
    const std::vector<Rational> img = {fx.evaluate(pt), fy.evaluate(pt)};
    EXPECT_EQ(p.substitute({{"x", fx}, {"y", fy}}).evaluate(pt), p.evaluate(img));
  }
}

TEST(MultiPolyProperty, RingAxioms) {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, kXY, 3, 4);
    const auto b = random_poly(rng, kXY, 3, 4);
    const auto c = random_poly(rng, kXY, 3, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(MultiPoly::parse(a.to_string(), kXY), a);
  }
}

TEST(MultiPoly, HomogeneousWeight) {
  const std::vector<int> w = {4, 2, 0, 0, -2, -4};
  EXPECT_EQ(qcurves::klein_form().homogeneous_weight(w), 0L);
  EXPECT_FALSE(qcurves::plucker_form("v31 + v3m1").homogeneous_weight(w).has_value());
  EXPECT_EQ(MultiPoly::parse("x^2*y", kXY).total_degree(), 3L);
}

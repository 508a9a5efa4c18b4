#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "qcurves/graded.hpp"
#include "qcurves/quadric.hpp"

using qcurves::GradedIdeal;
using qcurves::MultiPoly;
using qcurves::Rational;

namespace {

const std::vector<std::string> kC = {"c1", "c2"};

GradedIdeal gr24() {
  return GradedIdeal(kC, {1, 2},
                     {MultiPoly::parse("c1^3 - 2*c1*c2", kC), MultiPoly::parse("c1^4 - 3*c1^2*c2 + c2^2", kC)});
}

// Random homogeneous polynomial of degree d in variables of degree 1.
MultiPoly random_form(std::mt19937& rng, const std::vector<std::string>& vars, int d) {
  std::uniform_int_distribution<long> coef(-3, 3);
  MultiPoly p(vars);
  for (const auto& e : qcurves::monomials_of_degree(std::vector<int>(vars.size(), 1), d)) {
    if (rng() % 3 == 0) p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST(HilbertDim, FreeRing) {
  EXPECT_EQ(qcurves::hilbert_dim(GradedIdeal({"x", "y", "z"}, {1, 1, 1}), 1), 3U);
  EXPECT_EQ(qcurves::hilbert_dim(GradedIdeal({"x", "y", "z"}, {1, 1, 1}), 4), 15U);
}

TEST(HilbertDim, Gr24MiddleDegree) {
  EXPECT_EQ(qcurves::hilbert_dim(gr24(), 2), 2U);
  EXPECT_EQ(qcurves::hilbert_function(gr24(), 6), (std::vector<std::size_t>{1, 1, 2, 1, 1, 0, 0}));
}

TEST(HilbertDim, KleinQuotientDegreeTwo) {
  const GradedIdeal klein(qcurves::plucker_variables(), std::vector<int>(6, 1), {qcurves::klein_form()});
  EXPECT_EQ(qcurves::hilbert_dim(klein, 2), 20U);
}

TEST(HilbertDim, InhomogeneousGeneratorIsNamed) {
  const GradedIdeal bad(kC, {1, 2}, {MultiPoly::parse("c1^2 - c2", kC), MultiPoly::parse("c1^2 - c1", kC)});
  try {
    qcurves::hilbert_dim(bad, 2);
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("generator 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(qcurves::hilbert_dim(gr24(), -1), std::invalid_argument);
}

TEST(HilbertDim, LaurentGeneratorRejected) {
  const GradedIdeal bad({"x"}, {1}, {MultiPoly::parse("x^-1", {"x"})});
  EXPECT_TRUE(bad.first_inhomogeneous().has_value());
}

TEST(MonomialsOfDegree, CountsAndOrder) {
  EXPECT_EQ(qcurves::monomials_of_degree({1, 2}, 4).size(), 3U);  // c1^4, c1^2 c2, c2^2
  const auto m = qcurves::monomials_of_degree({1, 1}, 2);
  ASSERT_EQ(m.size(), 3U);
  EXPECT_EQ(m.front(), (qcurves::Exponents{2, 0}));
  EXPECT_EQ(m.back(), (qcurves::Exponents{0, 2}));
}

TEST(NormalForm, Gr24Reductions) {
  const auto ideal = gr24();
  EXPECT_TRUE(qcurves::normal_form(ideal, MultiPoly::parse("c1*c2^2", kC)).is_zero());
  EXPECT_EQ(qcurves::normal_form(ideal, MultiPoly::parse("c1^3", kC)).to_string(), "2*c1*c2");
  EXPECT_EQ(qcurves::normal_form(ideal, MultiPoly::parse("c1^2*c2", kC)).to_string(), "c2^2");
  EXPECT_EQ(qcurves::normal_form(ideal, MultiPoly::parse("c1^4", kC)).to_string(), "2*c2^2");
}

TEST(HilbertProperty, DegreeZeroIsOne) {
  std::mt19937 rng(3);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int i = 0; i < 30; ++i) {
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_form(rng, vars, 1 + static_cast<int>(rng() % 3)));
    EXPECT_EQ(qcurves::hilbert_dim(GradedIdeal(vars, {1, 1, 1}, gens), 0), 1U);
  }
}

TEST(HilbertProperty, AddingAGeneratorNeverIncreasesDimensions) {
  std::mt19937 rng(5);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int i = 0; i < 25; ++i) {
    GradedIdeal ideal(vars, {1, 1, 1}, {random_form(rng, vars, 2)});
    const auto bigger = ideal.with_generator(random_form(rng, vars, 2));
    for (int d = 0; d <= 4; ++d) EXPECT_LE(qcurves::hilbert_dim(bigger, d), qcurves::hilbert_dim(ideal, d));
  }
}

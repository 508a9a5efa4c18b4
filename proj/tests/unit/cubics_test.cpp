#include <gtest/gtest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "qcurves/cubics.hpp"
#include "qcurves/errors.hpp"

using qcurves::MultiPoly;
using qcurves::Rational;
using qcurves::ScrollCase;
using qcurves::WeightMultiset;

namespace {

// Two coordinate lines meet iff they share a coordinate point.
bool meet(const qcurves::FixedLine& x, const qcurves::FixedLine& y) {
  for (const auto& a : x.labels)
    for (const auto& b : y.labels)
      if (a == b) return true;
  return false;
}

}  // namespace

TEST(Census, ChainsOfThreeLinesByBruteForce) {
  const auto lines = qcurves::fixed_lines();
  int ordered = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j)
      for (std::size_t k = 0; k < lines.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        if (meet(lines[i], lines[j]) && meet(lines[j], lines[k]) && !meet(lines[i], lines[k])) ++ordered;
      }
  EXPECT_EQ(ordered / 2, qcurves::count_invariant_cubics().reduced_trees);
  EXPECT_EQ(ordered / 2, 4);
}

TEST(Census, ConicPlusLineFromContainedPoints) {
  // Each smooth fixed conic passes through two fixed points, each on two fixed lines.
  const auto conics = qcurves::fixed_conics();
  const auto lines = qcurves::fixed_lines();
  int count = 0;
  for (const auto& c : conics) {
    if (c.kind != qcurves::ConicKind::smooth) continue;
    for (const auto& l : lines)
      for (const auto& p : l.endpoints)
        if (c.contains(p)) ++count;
  }
  EXPECT_EQ(count, 8);
  EXPECT_EQ(qcurves::count_invariant_cubics().conic_plus_line, count);
}

TEST(Census, FullCount) {
  const auto c = qcurves::count_invariant_cubics();
  EXPECT_EQ(c.reduced_total, 12);
  EXPECT_EQ(c.pair_supports, 8);
  EXPECT_EQ(c.pair_supported, 16);
  EXPECT_EQ(c.triple_supports, 4);
  EXPECT_EQ(c.triple_lines, 8);
  EXPECT_EQ(c.degenerate_total, 36);
  EXPECT_EQ(c.families, 2);
  EXPECT_EQ(c.family_endpoints, 4);
  EXPECT_EQ(c.isolated, 32);
  EXPECT_EQ(c.euler_characteristic(), 36);
  EXPECT_NE(std::string(qcurves::CubicCensus::reconciliation()).find("families"), std::string::npos);
}

TEST(Census, MissingConicIsACountFailure) {
  auto conics = qcurves::fixed_conics();
  conics.pop_back();
  const auto graph = qcurves::incidence_graph(qcurves::fixed_points(qcurves::Ambient::quadric),
                                              qcurves::fixed_lines(), conics);
  EXPECT_THROW(qcurves::count_invariant_cubics(graph, conics), qcurves::ConsistencyError);
}

TEST(TwistedCubic, FamilyLiesOnQWithCertificate) {
  const auto check = qcurves::verify_twisted_cubic_family();
  EXPECT_TRUE(check.on_quadric);
  EXPECT_EQ(check.certificate, (qcurves::TorusCertificate{2, 0, 2}));
}

TEST(TwistedCubic, MembersAtSeveralValues) {
  for (long n : {1L, -1L, 2L, 7L}) {
    for (long d : {1L, 3L}) {
      const auto check = qcurves::verify_twisted_cubic_family(Rational(n, d));
      EXPECT_TRUE(check.on_quadric) << n << "/" << d;
      EXPECT_EQ(check.certificate, (qcurves::TorusCertificate{2, 0, 2}));
    }
  }
}

TEST(TwistedCubic, ZeroParameterRejected) {
  EXPECT_THROW(qcurves::verify_twisted_cubic_family(Rational(0)), std::invalid_argument);
  EXPECT_THROW(qcurves::twisted_cubic_member(Rational(0)), std::invalid_argument);
}

TEST(TwistedCubic, CertificateSolvesEveryTermEquation) {
  // Oracle: check alpha*m + beta*n - lambda = weight for every term directly.
  const auto curve = qcurves::twisted_cubic_member(Rational(5));
  const auto cert = qcurves::torus_certificate(curve);
  ASSERT_TRUE(cert.has_value());
  const auto weights = qcurves::plucker_basis().weights();
  for (std::size_t i = 0; i < qcurves::kPlueckerDim; ++i) {
    for (const auto& [e, c] : curve.coordinates()[i].terms()) {
      EXPECT_EQ(cert->alpha * e[0] + cert->beta * e[1] - cert->lambda, weights[i]);
    }
  }
}

TEST(TwistedCubic, NonInvariantCurveHasNoCertificate) {
  const auto curve = qcurves::ParametrizedCurve::parse({"u", "v"}, 2, {"u + v", "v", "0", "0", "0", "0"});
  EXPECT_FALSE(qcurves::torus_certificate(curve).has_value());
  const auto line = qcurves::ParametrizedCurve::parse({"u", "v"}, 2, {"u", "v", "0", "0", "0", "0"});
  EXPECT_TRUE(qcurves::torus_certificate(line).has_value());
}

TEST(Scroll, ParametrizationSatisfiesCatalecticant) {
  EXPECT_EQ(qcurves::catalecticant_minors().size(), 6U);
  EXPECT_EQ(qcurves::cone_minor().to_string(), "z0*z2 - z1^2");
  EXPECT_TRUE(qcurves::catalecticant_check());
}

TEST(Scroll, PerturbedParametrizationFails) {
  auto param = qcurves::scroll_parametrization();
  const std::vector<std::string> vars = param[0].variables();
  param[2] += MultiPoly::parse("t0^3*u0", vars);
  EXPECT_FALSE(qcurves::catalecticant_check(param));
  param = qcurves::scroll_parametrization();
  param[5] = MultiPoly::parse("t0*u1", vars);
  EXPECT_FALSE(qcurves::catalecticant_check(param));
}

TEST(Scroll, CaseWeightsAndFamilies) {
  const auto ii = qcurves::scroll_fixed_families(ScrollCase::ii);
  EXPECT_EQ(ii.weights, (std::array<int, 6>{2, 0, -2, -4, 4, 2}));
  EXPECT_EQ(ii.section_coordinate, "vm1m3");
  EXPECT_TRUE(ii.minors_homogeneous);
  EXPECT_TRUE(ii.projection_equivariant);
  EXPECT_EQ(ii.family_count(), 1U);
  ASSERT_EQ(ii.repeated_weight_groups.size(), 1U);
  EXPECT_EQ(ii.repeated_weight_groups[0], (std::vector<std::size_t>{0, 5}));

  const auto iii = qcurves::scroll_fixed_families(ScrollCase::iii);
  EXPECT_EQ(iii.weights, (std::array<int, 6>{4, 0, -4, -8, 2, -2}));
  EXPECT_EQ(iii.section_coordinate, "v1m3");
  EXPECT_TRUE(iii.minors_homogeneous);
  EXPECT_EQ(iii.family_count(), 0U);
}

TEST(Scroll, SectionWeightsAreTheRemainingFrameWeights) {
  // Oracle: the W1 weights with the dropped coordinate's weight removed.
  const WeightMultiset w1{4, 2, 0, -2, -4};
  EXPECT_EQ(qcurves::scroll_fixed_families(ScrollCase::ii).section_weights, w1.without_one(-4));
  EXPECT_EQ(qcurves::scroll_fixed_families(ScrollCase::iii).section_weights, w1.without_one(-2));
}

TEST(Scroll, WeightReversalPreservesQ) { EXPECT_TRUE(qcurves::weight_reversal_preserves_quadric()); }

TEST(SmoothSection, RulingWeightsAndSections) {
  const auto s = qcurves::smooth_section_cubics();
  EXPECT_EQ(s.first_factor, (std::array<int, 2>{3, -3}));
  EXPECT_EQ(s.second_factor, (std::array<int, 2>{1, -1}));
  // Oracle: C_{s,t} (x) Sym^2 C_{v,w} and Sym^2 C_{s,t} (x) C_{v,w}, enumerated here.
  std::vector<int> w12;
  std::vector<int> w21;
  for (int a : {3, -3})
    for (int b : {2, 0, -2}) w12.push_back(a + b);
  for (int a : {6, 0, -6})
    for (int b : {1, -1}) w21.push_back(a + b);
  EXPECT_EQ(s.bidegree_12, WeightMultiset(w12));
  EXPECT_EQ(s.bidegree_21, WeightMultiset(w21));
  EXPECT_EQ(s.bidegree_21.to_string(), "-7,-5,-1,1,5,7");
  EXPECT_TRUE(s.weights_distinct);
  EXPECT_TRUE(s.fixed_members_reducible);
}

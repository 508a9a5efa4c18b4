#include "qcurves/cohring.hpp"

#include <stdexcept>

#include "qcurves/errors.hpp"

namespace qcurves {

const std::vector<std::string>& chern_variables() {
  static const std::vector<std::string> vars = {"c1", "c2"};
  return vars;
}

const std::vector<int>& chern_degrees() {
  static const std::vector<int> degrees = {1, 2};
  return degrees;
}

GradedIdeal gr24_relations() {
  const auto& v = chern_variables();
  return GradedIdeal(v, chern_degrees(),
                     {MultiPoly::parse("c1^3 - 2*c1*c2", v), MultiPoly::parse("c1^4 - 3*c1^2*c2 + c2^2", v)});
}

long bundle_rank_arithmetic(long h0_hyperplane, long h0_twisted) {
  if (h0_hyperplane < 0 || h0_twisted < 0) throw std::invalid_argument("bundle_rank_arithmetic: negative h^0");
  const long rank = h0_twisted - 2 * h0_hyperplane;
  if (rank <= 0) {
    throw std::invalid_argument("bundle_rank_arithmetic: rank " + std::to_string(rank) +
                                " cannot be the rank of a projectivized bundle");
  }
  return rank;
}

namespace {

long chow_degree(const Exponents& e) {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * chern_degrees()[i];
  return d;
}

MultiPoly truncate(const MultiPoly& p, int max_degree) {
  MultiPoly out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (chow_degree(e) <= max_degree) out.add_term(e, c);
  }
  return out;
}

}  // namespace

ChernPolynomial::ChernPolynomial(MultiPoly p, int max_degree)
    : p_(truncate(p.in_variables(chern_variables()), max_degree)), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("ChernPolynomial: negative truncation degree");
  for (const auto& [e, c] : p_.terms()) {
    for (int x : e) {
      if (x < 0) throw std::invalid_argument("ChernPolynomial: negative exponent");
    }
  }
}

ChernPolynomial ChernPolynomial::one(int max_degree) {
  return ChernPolynomial(MultiPoly::constant(chern_variables(), 1), max_degree);
}

MultiPoly ChernPolynomial::piece(int degree) const {
  MultiPoly out(chern_variables());
  for (const auto& [e, c] : p_.terms()) {
    if (chow_degree(e) == degree) out.add_term(e, c);
  }
  return out;
}

ChernPolynomial ChernPolynomial::operator*(const ChernPolynomial& rhs) const {
  const int d = std::min(max_degree_, rhs.max_degree_);
  return ChernPolynomial(p_ * rhs.p_, d);
}

ChernPolynomial ChernPolynomial::inverse() const {
  if (p_.coefficient(Exponents(chern_variables().size(), 0)) != Rational(1)) {
    throw std::domain_error("ChernPolynomial::inverse: constant term must be 1");
  }
  // (1 + x)^-1 = sum (-x)^k; x has no constant term so k <= max_degree suffices.
  const ChernPolynomial minus_x(MultiPoly::constant(chern_variables(), 1) - p_, max_degree_);
  ChernPolynomial result = one(max_degree_);
  ChernPolynomial power = one(max_degree_);
  for (int k = 1; k <= max_degree_; ++k) {
    power = power * minus_x;
    result = ChernPolynomial(result.p_ + power.p_, max_degree_);
  }
  return result;
}

ChernPolynomial ChernPolynomial::pow(int n) const {
  const ChernPolynomial base = n < 0 ? inverse() : *this;
  ChernPolynomial result = one(max_degree_);
  for (int k = 0; k < std::abs(n); ++k) result = result * base;
  return result;
}

GrothendieckData grothendieck_data() {
  const auto& v = chern_variables();
  const std::vector<std::string> ring = {"c1", "c2", "h"};
  const auto gr = gr24_relations();
  const ChernPolynomial c_sub(MultiPoly::parse("1 + c1 + c2", v), kBundleRank);
  if (bundle_rank_arithmetic(kHyperplaneSections, kTwistedSections) != kBundleRank) {
    throw ConsistencyError("grothendieck_data: bundle rank mismatch");
  }
  // 0 -> U^5 -> O^16 -> G -> 0 with c(U) = 1 + c1 + c2, so c(G) = c(U)^-5.
  const auto c_g = c_sub.pow(-static_cast<int>(kHyperplaneSections));

  GrothendieckData out;
  out.relation = MultiPoly(ring);
  const auto h = MultiPoly::variable(ring, "h");
  for (int i = 0; i <= kBundleRank; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.raw_classes[k] = c_g.piece(i);
    out.reduced_classes[k] = normal_form(gr, out.raw_classes[k]);
    if (i > 4 && !out.reduced_classes[k].is_zero()) {
      throw ConsistencyError("grothendieck_data: c_" + std::to_string(i) + "(G) = " +
                             out.reduced_classes[k].to_string() + " does not vanish modulo the Gr(2,4) relations");
    }
    out.relation += out.reduced_classes[k].in_variables(ring) * h.pow(static_cast<unsigned>(kBundleRank - i));
  }
  return out;
}

MultiPoly expected_grothendieck_relation() {
  return MultiPoly::parse("h^6 - 5*c1*h^5 + (15*c1^2 - 5*c2)*h^4 - 40*c1*c2*h^3 + 50*c2^2*h^2", {"c1", "c2", "h"});
}

MultiPoly grothendieck_relation() {
  auto rel = grothendieck_data().relation;
  const auto want = expected_grothendieck_relation();
  if (!(rel == want)) {
    throw ConsistencyError("grothendieck_relation: computed " + rel.to_string() + ", expected " + want.to_string());
  }
  return rel;
}

GradedIdeal s3_ring_presentation() {
  const std::vector<std::string> ring = {"c1", "c2", "h"};
  std::vector<MultiPoly> gens;
  const auto gr = gr24_relations();
  for (const auto& g : gr.generators()) gens.push_back(g.in_variables(ring));
  gens.push_back(grothendieck_relation());
  GradedIdeal ideal(ring, {1, 2, 1}, std::move(gens));
  ideal.require_homogeneous();
  const std::array<long, 3> want = {3, 4, 6};
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (ideal.generator_degree(i) != want[i]) {
      throw ConsistencyError("s3_ring_presentation: generator " + std::to_string(i) + " has degree " +
                             std::to_string(ideal.generator_degree(i)));
    }
  }
  return ideal;
}

std::vector<std::size_t> hilbert_series_s3(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("hilbert_series_s3: negative degree");
  return hilbert_function(s3_ring_presentation(), max_degree);
}

PoincarePolynomial poincare_s3_from_bundle() {
  const auto series = hilbert_series_s3(9);
  std::vector<long> coeffs(2 * series.size(), 0);
  for (std::size_t k = 0; k < series.size(); ++k) coeffs[2 * k] = static_cast<long>(series[k]);
  return PoincarePolynomial(std::move(coeffs));
}

}  // namespace qcurves

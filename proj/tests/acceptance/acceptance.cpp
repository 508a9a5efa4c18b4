// One line per acceptance criterion; exit status is nonzero if any fails.
// Expected values are literals; computed values come from the library.

#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qcurves/cohring.hpp"
#include "qcurves/cubics.hpp"
#include "qcurves/errors.hpp"
#include "qcurves/fixedloci.hpp"
#include "qcurves/tangent.hpp"

namespace {

using namespace qcurves;

struct Criterion {
  const char* title;
  std::function<std::string()> check;  // empty string on success, else the first mismatch
};

template <typename A, typename B>
std::string expect_eq(const std::string& what, const A& computed, const B& expected) {
  if (computed == expected) return {};
  return what + " differs";
}

std::string first_of(std::initializer_list<std::string> results) {
  for (const auto& r : results)
    if (!r.empty()) return r;
  return {};
}

std::string criterion_lines() {
  const auto lines = fixed_lines();
  if (lines.size() != 4) return "expected 4 lines, got " + std::to_string(lines.size());
  const std::vector<std::string> displays = {"[s:t:0:0:0:0]", "[s:0:0:0:t:0]", "[0:s:0:0:0:t]", "[0:0:0:0:s:t]"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (lines[i].display() != displays[i]) return std::string("line ") + lines[i].tag + " is " + lines[i].display();
    if (!on_quadric(lines[i].parametrization())) return std::string("line ") + lines[i].tag + " is not on Q";
  }
  return {};
}

struct RowLiteral {
  const char* ambient;
  const char* sections;
  const char* moduli;
  std::size_t delta;
};

std::string compare_rows(const std::vector<TangentRow>& rows, const std::vector<RowLiteral>& lit) {
  if (rows.size() != lit.size()) return "row count " + std::to_string(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.ambient_text() != lit[i].ambient) return r.tag + " ambient " + r.ambient_text();
    if (r.sections.to_string() != lit[i].sections) return r.tag + " sections " + r.sections.to_string();
    if (r.moduli.to_string() != lit[i].moduli) return r.tag + " moduli " + r.moduli.to_string();
    if (r.delta != lit[i].delta) return r.tag + " delta " + std::to_string(r.delta);
  }
  return {};
}

std::string criterion_line_table() {
  return compare_rows(line_rows(), {
                                       {"-8,-6,-6,-4,-4,-2", "-8,-6,-4", "-6,-4,-2", 3},
                                       {"-8,-4,-2,-2,2,4", "-8,-2,4", "-4,-2,2", 2},
                                       {"-4,-2,2,2,4,8", "-4,2,8", "-2,2,4", 1},
                                       {"2,4,4,6,6,8", "4,6,8", "2,4,6", 0},
                                   });
}

std::string criterion_s1() {
  return expect_eq("S1", bb_poincare(components_of(line_rows())).to_string(), std::string("1+t^2+t^4+t^6"));
}

std::string criterion_conics() {
  const std::vector<std::string> ideals = {
      "<v1m3, vm1m3, v3m3 - 3*v1m1, v3m3*v1m1>",
      "<v3m1, vm1m3, v3m3 - 3*v1m1, v3m3*v1m1>",
      "<v31, v1m3, v3m3 - 3*v1m1, v3m3*v1m1>",
      "<v31, v3m1, v3m3 - 3*v1m1, v3m3*v1m1>",
      "<vm1m3, v3m3, v1m1, v3m1*v1m3>",
      "<v1m3, v3m3, v1m1, v31*vm1m3>",
      "<v3m1, v3m3, v1m1, v31*vm1m3>",
      "<v31, v3m3, v1m1, v3m1*v1m3>",
      "<v31, vm1m3, v3m3 - 3*v1m1, v3m1*v1m3 - v3m3*v1m1>",
      "<v3m1, v1m3, v3m3 - 3*v1m1, v31*vm1m3 + v3m3*v1m1>",
  };
  const auto conics = fixed_conics();  // analyze_conic checks homogeneity and both forms of Q
  if (conics.size() != 10) return "expected 10 conics";
  for (std::size_t i = 0; i < 10; ++i) {
    if (conics[i].ideal_text() != ideals[i]) return conics[i].tag + " is " + conics[i].ideal_text();
  }
  return {};
}

std::string criterion_conic_table() {
  return compare_rows(conic_rows(), {
                                        {"-8,-6,-6,-4,-4,-2 | -8,-6,-4,-4,-2", "-8,-6,-4,-4,-2", "-8,-6,-6,-4,-4,-2", 6},
                                        {"-8,-4,-2,-2,2,4 | -8,-4,-2,2,4", "-8,-4,-2,2,4", "-8,-4,-2,-2,2,4", 4},
                                        {"-4,-2,2,2,4,8 | -4,-2,2,4,8", "-4,-2,2,4,8", "-4,-2,2,2,4,8", 2},
                                        {"2,4,4,6,6,8 | 2,4,4,6,8", "2,4,4,6,8", "2,4,4,6,6,8", 0},
                                        {"-8,-6,-4,-2,-2,2 | -8,-6,-4,-2,4", "-8,-6,-4,-2,4", "-8,-6,-4,-2,-2,2", 5},
                                        {"-6,-4,-4,-2,2,4 | -8,-6,-4,2,8", "-8,-6,-4,2,8", "-6,-4,-4,-2,2,4", 4},
                                        {"-4,-2,2,4,4,6 | -8,-2,4,6,8", "-8,-2,4,6,8", "-4,-2,2,4,4,6", 2},
                                        {"-2,2,2,4,6,8 | -4,2,4,6,8", "-4,2,4,6,8", "-2,2,2,4,6,8", 1},
                                        {"-6,-4,-2,2,4,6 | -4,-2,0,2,4", "-4,-2,0,2,4", "-6,-4,-2,2,4,6", 3},
                                        {"-6,-2,-2,2,2,6 | -8,-4,0,4,8", "-8,-4,0,4,8", "-6,-2,-2,2,2,6", 3},
                                    });
}

std::string criterion_s2() {
  return expect_eq("S2", bb_poincare(components_of(conic_rows())).to_string(),
                   std::string("1+t^2+2t^4+2t^6+2t^8+t^10+t^12"));
}

std::string criterion_census() {
  const auto c = count_invariant_cubics(incidence_graph(), fixed_conics());
  return first_of({expect_eq("trees", c.reduced_trees, 4), expect_eq("conic plus line", c.conic_plus_line, 8),
                   expect_eq("reduced", c.reduced_total, 12), expect_eq("pair supported", c.pair_supported, 16),
                   expect_eq("triple lines", c.triple_lines, 8), expect_eq("total", c.degenerate_total, 36)});
}

std::string criterion_family() {
  const auto check = verify_twisted_cubic_family();
  return first_of({expect_eq("family on Q", check.on_quadric, true),
                   expect_eq("certificate", check.certificate, TorusCertificate{2, 0, 2}),
                   expect_eq("case ii families", scroll_fixed_families(ScrollCase::ii).family_count(), 1U),
                   expect_eq("case iii families", scroll_fixed_families(ScrollCase::iii).family_count(), 0U)});
}

std::string criterion_zero_weights() {
  const auto z = zero_weight_chain();
  return first_of({expect_eq("T_P4", z.w0_T_P4, 3), expect_eq("N", z.w0_N, 1), expect_eq("T_Q", z.w0_T_Q, 2),
                   expect_eq("T_P1", z.w0_T_P1, 1)});
}

std::string criterion_grothendieck() {
  const auto data = grothendieck_data();
  return first_of({expect_eq("relation", data.relation.to_string(),
                             std::string("15*c1^2*h^4 - 5*c1*h^5 + h^6 - 40*c1*c2*h^3 - 5*c2*h^4 + 50*c2^2*h^2")),
                   expect_eq("c5", data.reduced_classes[5].is_zero(), true),
                   expect_eq("c6", data.reduced_classes[6].is_zero(), true),
                   expect_eq("c5 raw nonzero", data.raw_classes[5].is_zero(), false)});
}

std::vector<std::size_t> convolution_oracle() {
  const std::vector<std::size_t> base = {1, 1, 2, 1, 1};
  std::vector<std::size_t> out(base.size() + 5, 0);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < 6; ++j) out[i + j] += base[i];
  return out;
}

std::string criterion_hilbert() {
  const auto h = hilbert_series_s3();
  const std::vector<std::size_t> literal = {1, 2, 4, 5, 6, 6, 5, 4, 2, 1};
  const std::vector<std::size_t> reversed(h.rbegin(), h.rend());
  return first_of({expect_eq("series", h, literal), expect_eq("palindrome", h, reversed),
                   expect_eq("sum", std::accumulate(h.begin(), h.end(), std::size_t{0}), std::size_t{36}),
                   expect_eq("oracle", h, convolution_oracle())});
}

std::string criterion_euler() {
  const auto c = count_invariant_cubics();
  const auto h = hilbert_series_s3();
  const auto sum = static_cast<int>(std::accumulate(h.begin(), h.end(), std::size_t{0}));
  return first_of({expect_eq("isolated", c.isolated, 32), expect_eq("families", c.families, 2),
                   expect_eq("census Euler vs Hilbert sum", c.euler_characteristic(), sum)});
}

template <typename F>
bool throws(F&& f) {
  try {
    f();
  } catch (const std::exception&) {
    return true;
  }
  return false;
}

std::string criterion_properties() {
  for (int d = 0; d <= 5; ++d) {
    const auto e = sl2_operator(Sl2Generator::e, d).matrix;
    const auto f = sl2_operator(Sl2Generator::f, d).matrix;
    const auto h = sl2_operator(Sl2Generator::h, d).matrix;
    if (!(e * f - f * e == h) || !(h * e - e * h == Rational(2) * e) || !(h * f - f * h == Rational(-2) * f)) {
      return "sl2 relations fail for d=" + std::to_string(d);
    }
  }

  std::mt19937 rng(41);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<int> weight(-6, 6);
  auto random_basis = [&](const std::string& prefix) {
    std::vector<std::string> labels;
    std::vector<int> weights;
    for (int i = size(rng); i > 0; --i) {
      labels.push_back(prefix + std::to_string(i));
      weights.push_back(weight(rng));
    }
    return WeightedBasis(labels, weights);
  };
  for (int i = 0; i < 100; ++i) {
    const auto a = random_basis("a");
    const auto b = random_basis("b");
    if (!(WeightMultiset::of(hom(a, b)) == WeightMultiset::of(tensor(dual(a), b)))) return "hom != tensor(dual)";
  }

  // Poincare outputs: palindromic, degree twice the dimension.
  const std::vector<std::pair<PoincarePolynomial, long>> outputs = {
      {bb_poincare(components_of(line_rows())), 3},
      {bb_poincare(components_of(conic_rows())), 6},
      {poincare_s3_from_bundle(), 9},
  };
  for (const auto& [p, dim] : outputs) {
    if (!p.is_palindromic() || p.degree() != 2 * dim) return "Poincare output " + p.to_string();
  }

  // Negative controls.
  auto param = scroll_parametrization();
  param[2] += MultiPoly::parse("t0^3*u0", param[2].variables());
  if (catalecticant_check(param)) return "perturbed catalecticant accepted";
  const std::vector<std::string> st = {"s", "t"};
  if (on_quadric(ParametrizedCurve::parse(st, 2, {"s", "0", "0", "0", "0", "t"}))) return "off-Q line accepted";
  auto gens = conic_ideal_table()[8].second;
  gens[3] = "v3m1*v1m3 + v3m3*v1m1";
  std::vector<MultiPoly> polys;
  for (const auto& g : gens) polys.push_back(plucker_form(g));
  if (!throws([&] { analyze_conic("3-a", polys); })) return "corrupted conic ideal accepted";
  if (!throws([] { verify_twisted_cubic_family(Rational(0)); })) return "a = 0 accepted";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Fixed lines: four, matching the coordinate list", criterion_lines},
      {"Line tangent table: ambient, sections, moduli and delta rows", criterion_line_table},
      {"Poincare polynomial of the line space", criterion_s1},
      {"Fixed conics: ten ideals, verbatim and on Q", criterion_conics},
      {"Conic tangent table: ten rows with delta 6,4,2,0,5,4,2,1,3,3", criterion_conic_table},
      {"Poincare polynomial of the conic space", criterion_s2},
      {"Degenerate cubic census 12 + 16 + 8 = 36 from the incidence graph", criterion_census},
      {"Twisted cubic family on Q with certificate (2,0,2); scroll families 1 and 0", criterion_family},
      {"Zero-weight chain (3,1,2,1)", criterion_zero_weights},
      {"Grothendieck relation with vanishing degree 5 and 6 classes", criterion_grothendieck},
      {"Hilbert series (1,2,4,5,6,6,5,4,2,1) against the convolution oracle", criterion_hilbert},
      {"Euler consistency 32 + 2*2 = 36 = Hilbert sum", criterion_euler},
      {"Property suites and negative controls", criterion_properties},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    try {
      detail = criteria[i].check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const bool ok = detail.empty();
    failures += ok ? 0 : 1;
    std::printf("[%s] %zu. %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title, ok ? "" : " -- ",
                detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}

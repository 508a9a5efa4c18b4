#include "qcurves_tools/suites.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qcurves/cohring.hpp"
#include "qcurves/cubics.hpp"
#include "qcurves/fixedloci.hpp"
#include "qcurves/graded.hpp"
#include "qcurves/quadric.hpp"
#include "qcurves/rep.hpp"
#include "qcurves/tangent.hpp"
#include "qcurves_tools/embedded_fixture.hpp"

namespace qcurves::tools {

// ---- fixture ---------------------------------------------------------------------------

Fixture::Fixture(json root) : root_(std::move(root)) {
  if (!root_.is_object() || !root_.contains("suites") || !root_["suites"].is_object()) {
    throw std::invalid_argument("fixture: missing \"suites\" object");
  }
  if (root_.value("version", 0) != 1) throw std::invalid_argument("fixture: unsupported version");
  for (const auto& [suite, checks] : root_["suites"].items()) {
    if (!checks.is_object()) throw std::invalid_argument("fixture: suite " + suite + " is not an object");
    for (const auto& [name, e] : checks.items()) {
      if (!e.is_object() || !e.contains("expected")) {
        throw std::invalid_argument("fixture: " + suite + "/" + name + " has no \"expected\" value");
      }
    }
  }
}

Fixture Fixture::parse(const std::string& text) {
  try {
    return Fixture(json::parse(text));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("fixture: ") + e.what());
  }
}

Fixture Fixture::embedded() { return parse(std::string(kEmbeddedFixture)); }

Fixture Fixture::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("fixture: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const json* Fixture::entry(const std::string& suite, const std::string& check) const {
  const auto& suites = root_["suites"];
  const auto s = suites.find(suite);
  if (s == suites.end()) return nullptr;
  const auto c = s->find(check);
  return c == s->end() ? nullptr : &*c;
}

std::vector<std::string> Fixture::checks(const std::string& suite) const {
  std::vector<std::string> out;
  const auto& suites = root_["suites"];
  const auto s = suites.find(suite);
  if (s == suites.end()) return out;
  for (const auto& [name, _] : s->items()) out.push_back(name);
  return out;
}

// ---- operation tags ------------------------------------------------------------------------

namespace op {
constexpr const char* substitute = "polyalg.poly_eval_substitute";
constexpr const char* hilbert_dim = "polyalg.hilbert_dim";
constexpr const char* symd_basis = "rep.symd_basis";
constexpr const char* sl2_operator = "rep.sl2_operator";
constexpr const char* induced_basis = "rep.induced_basis";
constexpr const char* wedge2_action = "rep.wedge2_operator_action";
constexpr const char* hyperplane = "rep.invariant_hyperplane";
constexpr const char* klein = "quadricgeo.klein_form";
constexpr const char* on_quadric = "quadricgeo.on_quadric";
constexpr const char* fixed_points = "quadricgeo.fixed_points";
constexpr const char* fixed_lines = "fixedloci.fixed_lines";
constexpr const char* fixed_conics = "fixedloci.fixed_conics";
constexpr const char* incidence = "fixedloci.incidence_graph";
constexpr const char* census = "fixedloci.count_invariant_cubics";
constexpr const char* twisted = "fixedloci.verify_twisted_cubic_family";
constexpr const char* scroll = "fixedloci.scroll_fixed_families";
constexpr const char* catalecticant = "fixedloci.catalecticant_check";
constexpr const char* line_row = "tangentbb.line_tangent_row";
constexpr const char* conic_row = "tangentbb.conic_tangent_row";
constexpr const char* bb = "tangentbb.bb_poincare";
constexpr const char* euler = "tangentbb.euler_characteristic";
constexpr const char* zero_weight = "tangentbb.zero_weight_chain";
constexpr const char* gr24 = "cohring.gr24_relations";
constexpr const char* bundle_rank = "cohring.bundle_rank_arithmetic";
constexpr const char* grothendieck = "cohring.grothendieck_relation";
constexpr const char* hilbert_s3 = "cohring.hilbert_series_s3";
constexpr const char* poincare_s3 = "cohring.poincare_s3_from_bundle";
}  // namespace op

const std::set<std::string>& required_operations() {
  static const std::set<std::string> ops = {
      op::substitute,   op::hilbert_dim, op::symd_basis,   op::sl2_operator,  op::induced_basis, op::wedge2_action,
      op::hyperplane,   op::klein,       op::on_quadric,   op::fixed_points,  op::fixed_lines,   op::fixed_conics,
      op::incidence,    op::census,      op::twisted,      op::scroll,        op::catalecticant, op::line_row,
      op::conic_row,    op::bb,          op::euler,        op::zero_weight,   op::gr24,          op::bundle_rank,
      op::grothendieck, op::hilbert_s3,  op::poincare_s3};
  return ops;
}

namespace {

// ---- report builder ----------------------------------------------------------------------

class Builder {
 public:
  Builder(std::string suite, const Fixture& fixture) : fixture_(fixture) { report_.suite = std::move(suite); }

  void check(const std::string& name, std::initializer_list<const char*> ops, const std::function<json()>& compute) {
    for (const char* o : ops) report_.ops.insert(o);
    Item item;
    item.name = name;
    try {
      item.computed = compute();
    } catch (const std::exception& e) {
      item.computed = std::string("error: ") + e.what();
    }
    if (const json* e = fixture_.entry(report_.suite, name)) {
      item.expected = (*e)["expected"];
      item.ref = e->value("ref", "");
      item.status = item.expected == item.computed ? Status::pass : Status::fail;
    } else {
      item.expected = nullptr;
      item.ref = "no fixture entry";
    }
    report_.items.push_back(std::move(item));
  }

  Report& report() { return report_; }

  /// Fixture entries without a matching check fail, so fixture and code stay in step.
  Report finish() {
    for (const auto& name : fixture_.checks(report_.suite)) {
      const bool seen = std::any_of(report_.items.begin(), report_.items.end(),
                                    [&](const Item& i) { return i.name == name; });
      if (!seen) {
        const json* e = fixture_.entry(report_.suite, name);
        report_.items.push_back({name, (*e)["expected"], "not computed", Status::fail, e->value("ref", "")});
      }
    }
    return std::move(report_);
  }

 private:
  const Fixture& fixture_;
  Report report_;
};

json weights_json(const WeightedBasis& b) { return b.weights(); }

json with_key(const char* key, const std::string& value, json rest) {
  json out = {{key, value}};
  out.update(rest);
  return out;
}

json points_json(const std::vector<PlueckerPoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(p.to_string());
  return out;
}

json line_json(const FixedLine& l) {
  return {{"span", {l.labels[0], l.labels[1]}}, {"weights", {l.weights[0], l.weights[1]}}, {"display", l.display()}};
}

json conic_json(const FixedConic& c) {
  return {{"ideal", c.ideal_text()},
          {"plane_weights", WeightMultiset::of(c.plane).to_string()},
          {"equation_weight", c.equation_weight},
          {"kind", to_string(c.kind)}};
}

json row_json(const TangentRow& r) {
  std::string ambient;
  for (const auto& b : r.ambient_blocks) ambient += (ambient.empty() ? "" : ",") + b.to_string();
  return {{"ambient", ambient}, {"sections", r.sections.to_string()}, {"moduli", r.moduli.to_string()}, {"delta", r.delta}};
}

json census_json(const CubicCensus& c) {
  return {{"reduced_trees", c.reduced_trees},     {"conic_plus_line", c.conic_plus_line},
          {"reduced_total", c.reduced_total},     {"pair_of_lines_supported", c.pair_supported},
          {"triple_lines", c.triple_lines},       {"degenerate_total", c.degenerate_total},
          {"families", c.families},               {"family_endpoints", c.family_endpoints},
          {"isolated", c.isolated},               {"euler_characteristic", c.euler_characteristic()},
          {"reconciliation", CubicCensus::reconciliation()}};
}

json edges_json(const IncidenceGraph& g) {
  json out = json::array();
  for (const auto& e : g.edges()) {
    out.push_back({{"a", e.a}, {"b", e.b}, {"relation", to_string(e.relation)}, {"witness", e.witness.to_string()}});
  }
  return out;
}

// Klein restricted to the plane is a multiple of the conic equation, H restricts to zero.
bool q_forms_in_ideal(const FixedConic& c) {
  if (!restrict_to_span(hyperplane_form(), c.plane_vectors).is_zero()) return false;
  const auto k = restrict_to_span(klein_form(), c.plane_vectors);
  const auto& g = c.plane_equation;
  if (k.is_zero()) return true;
  const auto& [e, coef] = *g.terms().begin();
  const Rational lambda = k.coefficient(e) / coef;
  return k == g * lambda;
}

std::string markdown_rows(const std::vector<TangentRow>& rows, const std::string& ambient_header,
                          const std::string& section_header) {
  std::ostringstream os;
  os << "| Type | " << ambient_header << " | " << section_header << " | Number of negative weights |\n";
  os << "|---|---|---|---|\n";
  for (const auto& r : rows) {
    const auto j = row_json(r);
    os << "| (" << r.tag << ") | " << j["ambient"].get<std::string>() << " | " << r.sections.to_string() << " | "
       << r.delta << " |\n";
  }
  return os.str();
}

// ---- suites ----------------------------------------------------------------------------------

Report lines_suite(const Fixture& f) {
  Builder b("lines", f);
  b.check("Sym^3 weights", {op::symd_basis}, [] { return weights_json(symd_basis(3)); });
  b.check("sl2 relations on Sym^3", {op::sl2_operator}, [] {
    const auto e = sl2_operator(Sl2Generator::e, 3).matrix;
    const auto fm = sl2_operator(Sl2Generator::f, 3).matrix;
    const auto h = sl2_operator(Sl2Generator::h, 3).matrix;
    return e * fm - fm * e == h && h * e - e * h == Rational(2) * e && h * fm - fm * h == Rational(-2) * fm;
  });
  b.check("wedge2 of Sym^3 weights", {op::induced_basis},
          [] { return WeightMultiset::of(wedge2(symd_basis(3))).to_string(); });
  b.check("e on v1m3", {op::wedge2_action},
          [] { return wedge2_operator_action(Sl2Generator::e, 1, -3).to_string(); });
  b.check("e on v31", {op::wedge2_action}, [] { return wedge2_operator_action(Sl2Generator::e, 3, 1).to_string(); });
  b.check("invariant hyperplane", {op::hyperplane}, [] { return invariant_hyperplane().to_string(); });
  b.check("e on invariant hyperplane", {op::hyperplane, op::wedge2_action},
          [] { return wedge2_operator_action(Sl2Generator::e, invariant_hyperplane()).to_string(); });
  b.check("Klein form", {op::klein}, [] { return klein_form().to_string(); });
  b.check("Klein form at [1:0:0:0:0:1]", {op::klein},
          [] { return evaluate(klein_form(), PlueckerPoint::parse("[1:0:0:0:0:1]")).to_string(); });
  b.check("fixed points of Q", {op::fixed_points}, [] { return points_json(fixed_points(Ambient::quadric)); });
  b.check("fixed points of H", {op::fixed_points}, [] { return points_json(fixed_points(Ambient::hyperplane)); });
  b.check("q0 on Q", {op::on_quadric}, [] { return on_quadric(PlueckerPoint::parse("[0:0:3:1:0:0]")); });
  b.check("fixed line count", {op::fixed_lines}, [] { return fixed_lines().size(); });
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string tag(1, static_cast<char>('a' + i));
    b.check("line " + tag, {op::fixed_lines}, [i] { return line_json(fixed_lines().at(i)); });
  }
  b.check("span(v31, vm1m3) on Q", {op::on_quadric, op::substitute}, [] {
    const auto c = ParametrizedCurve::parse({"s", "t"}, 2, {"s", "0", "0", "0", "0", "t"});
    return on_quadric(c);
  });
  b.check("line meetings", {op::incidence}, [] {
    json out = json::array();
    const auto g = incidence_graph();
    for (const auto& e : g.edges()) {
      if (e.relation == Relation::meets) out.push_back({e.a, e.b, point_id(e.witness)});
    }
    return out;
  });
  return b.finish();
}

Report conics_suite(const Fixture& f) {
  Builder b("conics", f);
  std::vector<FixedConic> conics;
  b.check("fixed conic count", {op::fixed_conics}, [&] {
    conics = fixed_conics();
    return conics.size();
  });
  for (const auto& [tag, _] : conic_ideal_table()) {
    const std::string t = tag;
    b.check("conic " + t, {op::fixed_conics}, [&, t] {
      for (const auto& c : conics) {
        if (c.tag == t) return conic_json(c);
      }
      throw std::runtime_error("conic " + t + " not computed");
    });
  }
  b.check("Q equations in every ideal", {op::fixed_conics}, [&] {
    return !conics.empty() && std::all_of(conics.begin(), conics.end(), q_forms_in_ideal);
  });
  b.check("generators weight-homogeneous", {op::fixed_conics}, [&] {
    const auto w = plucker_basis().weights();
    return !conics.empty() && std::all_of(conics.begin(), conics.end(), [&](const FixedConic& c) {
      return std::all_of(c.generators.begin(), c.generators.end(),
                         [&](const MultiPoly& g) { return g.is_homogeneous(w); });
    });
  });
  b.check("fixed planes of H", {op::fixed_points}, [] { return fixed_planes().size(); });
  b.check("points on smooth conics", {op::incidence}, [] {
    const auto g = incidence_graph();
    json out = json::object();
    for (const char* t : {"3-a", "3-b"}) out[t] = g.neighbors(t, LocusKind::point);
    return out;
  });
  return b.finish();
}

Report tables_suite(const Fixture& f) {
  Builder b("tables", f);
  b.check("Sym^2 of dual (4,2)", {op::induced_basis}, [] {
    return WeightMultiset::of(sym2(dual(WeightedBasis({"x", "y"}, {4, 2})))).to_string();
  });
  std::vector<TangentRow> lrows;
  std::vector<TangentRow> crows;
  const auto lines = fixed_lines();
  for (const auto& l : lines) {
    b.check("line tangent " + l.id(), {op::line_row, op::induced_basis}, [&] {
      lrows.push_back(line_tangent_row(l));
      return row_json(lrows.back());
    });
  }
  for (const auto& c : fixed_conics()) {
    b.check("conic tangent " + c.tag, {op::conic_row, op::induced_basis}, [&] {
      crows.push_back(conic_tangent_row(c));
      return row_json(crows.back());
    });
  }
  b.check("no zero moduli weights", {op::line_row, op::conic_row}, [&] {
    auto ok = [](const TangentRow& r) { return r.moduli.count(0) == 0; };
    return std::all_of(lrows.begin(), lrows.end(), ok) && std::all_of(crows.begin(), crows.end(), ok);
  });
  b.check("moduli dimensions", {op::line_row, op::conic_row}, [&] {
    json out = json::array();
    for (const auto& r : lrows) out.push_back(r.moduli.size());
    for (const auto& r : crows) out.push_back(r.moduli.size());
    return out;
  });
  auto& rep = b.report();
  rep.markdown_extra = "### Tangent weights at fixed lines\n\n" +
                       markdown_rows(lrows, "Weights of T Gr(2,W1)", "Weights of H^0(O_L(2))") +
                       "\n### Tangent weights at fixed conics\n\n" +
                       markdown_rows(crows, "Weights of T P(Sym^2 U^*)", "Weights of H^0(O_C(2))");
  json lj = json::array();
  json cj = json::array();
  for (const auto& r : lrows) lj.push_back(with_key("type", r.tag, row_json(r)));
  for (const auto& r : crows) cj.push_back(with_key("type", r.tag, row_json(r)));
  rep.data = {{"lines", lj}, {"conics", cj}};
  return b.finish();
}

Report poincare_suite(const Fixture& f) {
  Builder b("poincare", f);
  PoincarePolynomial s1, s2, s3;
  b.check("S1", {op::bb, op::line_row}, [&] {
    s1 = bb_poincare(components_of(line_rows()));
    return s1.to_string();
  });
  b.check("S2", {op::bb, op::conic_row}, [&] {
    s2 = bb_poincare(components_of(conic_rows()));
    return s2.to_string();
  });
  b.check("S3", {op::poincare_s3}, [&] {
    s3 = poincare_s3_from_bundle();
    return s3.to_string();
  });
  b.check("empty component list", {op::bb}, [] { return bb_poincare({}).to_string(); });
  b.check("Euler S1", {op::euler}, [] { return euler_characteristic(components_of(line_rows())); });
  b.check("Euler S2", {op::euler}, [] { return euler_characteristic(components_of(conic_rows())); });
  b.check("Euler S3 census", {op::euler, op::census},
          [] { return euler_characteristic(census_components(count_invariant_cubics())); });
  b.check("palindromic", {}, [&] { return json{s1.is_palindromic(), s2.is_palindromic(), s3.is_palindromic()}; });
  b.check("degrees", {}, [&] { return json{s1.degree(), s2.degree(), s3.degree()}; });
  b.report().data = {{"S1", s1.to_string()}, {"S2", s2.to_string()}, {"S3", s3.to_string()}};
  return b.finish();
}

Report ring_suite(const Fixture& f) {
  Builder b("ring", f);
  b.check("Gr(2,4) relations", {op::gr24}, [] {
    json out = json::array();
    const auto gr = gr24_relations();
    for (const auto& g : gr.generators()) out.push_back(g.to_string());
    return out;
  });
  b.check("Gr(2,4) Hilbert function", {op::gr24, op::hilbert_dim},
          [] { return hilbert_function(gr24_relations(), 5); });
  b.check("free ring in 3 variables, degree 1", {op::hilbert_dim},
          [] { return hilbert_dim(GradedIdeal({"x", "y", "z"}, {1, 1, 1}), 1); });
  b.check("Pluecker space modulo Klein, degree 2", {op::hilbert_dim, op::klein},
          [] { return hilbert_dim(GradedIdeal(plucker_variables(), std::vector<int>(6, 1), {klein_form()}), 2); });
  b.check("bundle rank", {op::bundle_rank}, [] { return bundle_rank_arithmetic(); });
  b.check("Chern classes of G", {op::gr24}, [] {
    json out = json::array();
    const auto data = grothendieck_data();
    for (const auto& c : data.reduced_classes) out.push_back(c.to_string());
    return out;
  });
  b.check("Grothendieck relation", {op::grothendieck}, [] { return grothendieck_relation().to_string(); });
  std::vector<std::size_t> series;
  b.check("Hilbert series", {op::hilbert_s3}, [&] {
    series = hilbert_series_s3(9);
    return series;
  });
  b.check("Hilbert series degree 10", {op::hilbert_s3}, [] { return hilbert_series_s3(10).at(10); });
  b.check("Hilbert series sum", {op::hilbert_s3}, [&] {
    std::size_t s = 0;
    for (auto d : series) s += d;
    return s;
  });
  b.check("presentation generator degrees", {op::gr24, op::grothendieck}, [&] {
    const auto ideal = s3_ring_presentation();
    json degrees = json::array();
    json gens = json::array();
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
      degrees.push_back(ideal.generator_degree(i));
      gens.push_back(ideal.generators()[i].to_string());
    }
    b.report().data["generators"] = gens;
    return degrees;
  });
  return b.finish();
}

Report example_suite(const Fixture& f) {
  Builder b("example", f);
  std::optional<ZeroWeightChain> z;
  auto field = [&](const std::string& name, int ZeroWeightChain::*m) {
    b.check(name, {op::zero_weight}, [&, m] {
      if (!z) z = zero_weight_chain();
      return (*z).*m;
    });
  };
  field("w0(f*T_P4)", &ZeroWeightChain::w0_T_P4);
  field("w0(f*N)", &ZeroWeightChain::w0_N);
  field("w0(f*T_Q)", &ZeroWeightChain::w0_T_Q);
  field("w0(T_P1)", &ZeroWeightChain::w0_T_P1);
  field("w0(moduli)", &ZeroWeightChain::w0_moduli);
  b.check("f equivariant", {op::zero_weight}, [] { return zero_weight_chain().equivariant; });
  return b.finish();
}

Report cubics_suite(const Fixture& f) {
  Builder b("cubics", f);
  std::optional<CubicCensus> c;
  auto count = [&](const std::string& name, int CubicCensus::*m) {
    b.check(name, {op::census, op::incidence}, [&, m] {
      if (!c) c = count_invariant_cubics();
      return (*c).*m;
    });
  };
  count("reduced trees", &CubicCensus::reduced_trees);
  count("conic plus line", &CubicCensus::conic_plus_line);
  count("reduced subtotal", &CubicCensus::reduced_total);
  count("pair-of-lines supported", &CubicCensus::pair_supported);
  count("triple lines", &CubicCensus::triple_lines);
  count("degenerate total", &CubicCensus::degenerate_total);
  count("families", &CubicCensus::families);
  count("isolated", &CubicCensus::isolated);
  b.check("census Euler number", {op::census}, [] { return count_invariant_cubics().euler_characteristic(); });
  b.check("C_a on Q (formal a)", {op::twisted, op::on_quadric, op::substitute},
          [] { return verify_twisted_cubic_family().on_quadric; });
  b.check("C_a on Q (a = 1)", {op::twisted}, [] { return verify_twisted_cubic_family(Rational(1)).on_quadric; });
  b.check("C_a on Q (a = -2/3)", {op::twisted},
          [] { return verify_twisted_cubic_family(Rational(-2, 3)).on_quadric; });
  b.check("C_a torus certificate", {op::twisted}, [] {
    const auto t = verify_twisted_cubic_family().certificate;
    return json{t.alpha, t.beta, t.lambda};
  });
  auto groups = [](ScrollCase s) {
    json out = json::array();
    const auto a = scroll_fixed_families(s);
    for (const auto& g : a.repeated_weight_groups) {
      json grp = json::array();
      for (auto i : g) grp.push_back(scroll_variables()[i]);
      out.push_back(grp);
    }
    return out;
  };
  b.check("scroll ii repeated weights", {op::scroll}, [&] { return groups(ScrollCase::ii); });
  b.check("scroll iii repeated weights", {op::scroll}, [&] { return groups(ScrollCase::iii); });
  b.check("scroll minors homogeneous", {op::scroll}, [] {
    return json{scroll_fixed_families(ScrollCase::ii).minors_homogeneous,
                scroll_fixed_families(ScrollCase::iii).minors_homogeneous};
  });
  b.check("scroll projection equivariant", {op::scroll}, [] {
    return json{scroll_fixed_families(ScrollCase::ii).projection_equivariant,
                scroll_fixed_families(ScrollCase::iii).projection_equivariant};
  });
  b.check("catalecticant check", {op::catalecticant, op::substitute}, [] { return catalecticant_check(); });
  b.check("perturbed parametrization", {op::catalecticant}, [] {
    auto p = scroll_parametrization();
    p[0] = MultiPoly::parse("t0^3*u0 + t1^3*u0", p[0].variables());
    return catalecticant_check(p);
  });
  b.check("smooth section weights (1,2)", {}, [] { return smooth_section_cubics().bidegree_12.to_string(); });
  b.check("smooth section weights (2,1)", {}, [] { return smooth_section_cubics().bidegree_21.to_string(); });
  b.check("smooth section fixed cubics reducible", {},
          [] { return smooth_section_cubics().fixed_members_reducible; });
  b.check("weight reversal preserves Q", {}, [] { return weight_reversal_preserves_quadric(); });
  return b.finish();
}

Report loci_suite(const Fixture& f) {
  Builder b("loci", f);
  json lines = json::array();
  json conics = json::array();
  json edges = json::array();
  json census;
  b.check("lines", {op::fixed_lines}, [&] {
    for (const auto& l : fixed_lines()) lines.push_back(with_key("tag", l.id(), line_json(l)));
    return lines.size();
  });
  b.check("conics", {op::fixed_conics}, [&] {
    for (const auto& c : fixed_conics()) conics.push_back(with_key("tag", c.tag, conic_json(c)));
    return conics.size();
  });
  b.check("incidence edges", {op::incidence}, [&] {
    edges = edges_json(incidence_graph());
    return edges.size();
  });
  b.check("lines a and d disjoint", {op::incidence}, [] { return !incidence_graph().adjacent("a", "d"); });
  b.check("lines b and c disjoint", {op::incidence}, [] { return !incidence_graph().adjacent("b", "c"); });
  b.check("census total", {op::census}, [&] {
    census = census_json(count_invariant_cubics());
    return census["degenerate_total"];
  });
  b.report().data = {{"lines", lines}, {"conics", conics}, {"incidence", edges}, {"census", census}};
  return b.finish();
}

using SuiteFn = Report (*)(const Fixture&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"lines", lines_suite},       {"conics", conics_suite}, {"cubics", cubics_suite},   {"tables", tables_suite},
      {"poincare", poincare_suite}, {"ring", ring_suite},     {"example", example_suite}, {"loci", loci_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lines", "conics",  "cubics",  "tables",
                                                 "poincare", "ring", "example", "loci"};
  return names;
}

bool is_suite(const std::string& name) { return registry().count(name) != 0; }

Report run_suite(const std::string& name, const Fixture& fixture) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(fixture);
}

std::vector<Report> run(const std::string& command, const Fixture& fixture, bool fail_fast) {
  if (command != "all") return {run_suite(command, fixture)};
  std::vector<Report> out;
  if (fail_fast) {
    for (const auto& name : suite_names()) {
      out.push_back(run_suite(name, fixture));
      if (out.back().status() == Status::fail) break;
    }
    return out;
  }
  std::vector<std::future<Report>> jobs;
  for (const auto& name : suite_names()) {
    jobs.push_back(std::async(std::launch::async, [&fixture, name] { return run_suite(name, fixture); }));
  }
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace qcurves::tools

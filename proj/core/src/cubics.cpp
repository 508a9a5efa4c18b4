#include "qcurves/cubics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qcurves/errors.hpp"
#include "qcurves/linalg.hpp"

namespace qcurves {

const char* CubicCensus::reconciliation() {
  return "isolated = total degenerate - 2 * families: each P^1 family of smooth fixed cubics is closed up by "
         "two degenerate flat limits, which are counted in the degenerate total but are not isolated";
}

namespace {

// Simple paths with three edges in the line graph, each counted once.
int count_line_chains(const IncidenceGraph& g) {
  std::vector<std::string> lines;
  for (const auto& n : g.nodes()) {
    if (n.kind == LocusKind::line) lines.push_back(n.id);
  }
  int paths = 0;
  for (const auto& a : lines) {
    for (const auto& b : g.neighbors(a, LocusKind::line)) {
      for (const auto& c : g.neighbors(b, LocusKind::line)) {
        if (c == a) continue;
        for (const auto& d : g.neighbors(c, LocusKind::line)) {
          if (d == a || d == b) continue;
          ++paths;
        }
      }
    }
  }
  return paths / 2;  // each path was seen from both ends
}

bool contains_edge(const IncidenceGraph& g, const std::string& big, const std::string& small) {
  const auto* e = g.edge(big, small);
  return e != nullptr && e->relation == Relation::contains && e->a == big;
}

int count_conic_plus_line(const IncidenceGraph& g, const std::vector<FixedConic>& conics) {
  int n = 0;
  for (const auto& c : conics) {
    if (c.kind != ConicKind::smooth) continue;
    for (const auto& p : g.neighbors(c.tag, LocusKind::point)) {
      if (!contains_edge(g, c.tag, p)) continue;
      for (const auto& l : g.neighbors(p, LocusKind::line)) {
        if (!contains_edge(g, l, p) || contains_edge(g, c.tag, l)) continue;
        // The line must meet the conic only at p for the union to be a nodal cubic.
        bool other_on_conic = false;
        for (const auto& q : g.neighbors(l, LocusKind::point)) {
          if (q != p && contains_edge(g, l, q) && contains_edge(g, c.tag, q)) other_on_conic = true;
        }
        if (!other_on_conic) ++n;
      }
    }
  }
  return n;
}

int count_contained_lines(const IncidenceGraph& g, const std::vector<FixedConic>& conics, ConicKind kind) {
  int n = 0;
  for (const auto& c : conics) {
    if (c.kind != kind) continue;
    const auto lines = g.neighbors(c.tag, LocusKind::line);
    const auto contained = std::count_if(lines.begin(), lines.end(),
                                         [&](const std::string& l) { return contains_edge(g, c.tag, l); });
    const long want = kind == ConicKind::line_pair ? 2 : 1;
    if (contained != want) {
      throw ConsistencyError("count_invariant_cubics: conic " + c.tag + " contains " + std::to_string(contained) +
                             " fixed lines, expected " + std::to_string(want));
    }
    n += static_cast<int>(contained);
  }
  return n;
}

void require_count(const char* cls, int got, int want) {
  if (got != want) {
    throw ConsistencyError(std::string("count_invariant_cubics: class ") + cls + " has " + std::to_string(got) +
                           ", expected " + std::to_string(want));
  }
}

}  // namespace

CubicCensus count_invariant_cubics(const IncidenceGraph& graph, const std::vector<FixedConic>& conics) {
  CubicCensus c;
  c.reduced_trees = count_line_chains(graph);
  c.conic_plus_line = count_conic_plus_line(graph, conics);
  c.reduced_total = c.reduced_trees + c.conic_plus_line;
  c.pair_supports = count_contained_lines(graph, conics, ConicKind::line_pair);
  c.pair_supported = c.pair_supports * kNonReducedStructures;
  c.triple_supports = count_contained_lines(graph, conics, ConicKind::double_line);
  c.triple_lines = c.triple_supports * kNonReducedStructures;
  c.degenerate_total = c.reduced_total + c.pair_supported + c.triple_lines;

  int per_section = 0;
  for (auto which : {ScrollCase::ii, ScrollCase::iii}) {
    per_section += static_cast<int>(scroll_fixed_families(which).family_count());
  }
  c.families = weight_reversal_preserves_quadric() ? 2 * per_section : per_section;
  c.family_endpoints = 2 * c.families;
  c.isolated = c.degenerate_total - c.family_endpoints;

  require_count("reduced-trees", c.reduced_trees, 4);
  require_count("conic-plus-line", c.conic_plus_line, 8);
  require_count("pair-of-lines-supported", c.pair_supported, 16);
  require_count("triple-lines", c.triple_lines, 8);
  require_count("smooth-family components", c.families, 2);
  return c;
}

CubicCensus count_invariant_cubics() { return count_invariant_cubics(incidence_graph(), fixed_conics()); }

// ---- C_a ---------------------------------------------------------------------------

ParametrizedCurve twisted_cubic_family() {
  return ParametrizedCurve::parse({"u", "v", "a"}, 2,
                                  {"u^3", "a*u^2*v", "3*u*v^2", "u*v^2", "3*a^-1*v^3", "0"});
}

ParametrizedCurve twisted_cubic_member(const Rational& a) {
  if (a.is_zero()) throw std::invalid_argument("twisted_cubic_member: a must be nonzero");
  const std::vector<std::string> uv = {"u", "v"};
  const auto fam = twisted_cubic_family();
  std::map<std::string, MultiPoly> sub = {{"u", MultiPoly::variable(uv, "u")},
                                          {"v", MultiPoly::variable(uv, "v")},
                                          {"a", MultiPoly::constant(uv, a)}};
  std::array<MultiPoly, kPlueckerDim> coords;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    const auto& x = fam.coordinates()[i];
    // a^-1 has no polynomial image; expand term by term instead.
    MultiPoly out(uv);
    for (const auto& [e, coef] : x.terms()) {
      Rational c = coef;
      for (int k = 0; k < std::abs(e[2]); ++k) c = e[2] > 0 ? c * a : c * a.inverse();
      out.add_term({e[0], e[1]}, c);
    }
    coords[i] = out;
  }
  return ParametrizedCurve(uv, 2, coords);
}

std::optional<TorusCertificate> torus_certificate(const ParametrizedCurve& curve, int beta) {
  if (curve.homogeneous_count() != 2) throw std::invalid_argument("torus_certificate: curve must be over P^1");
  const auto weights = plucker_basis().weights();
  // Unknowns (alpha, lambda): alpha*m - lambda = w_i - beta*n for every term u^m v^n.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    for (const auto& [e, coef] : curve.coordinates()[i].terms()) {
      rows.push_back({Rational(e[0]), Rational(-1)});
      rhs.emplace_back(weights[i] - beta * e[1]);
    }
  }
  if (rows.empty()) return std::nullopt;
  const auto m = Matrix::from_rows(rows, 2);
  if (rank(m) != 2) return std::nullopt;
  Vector x;
  if (!solve(m, rhs, x) || !x[0].is_integer() || !x[1].is_integer()) return std::nullopt;
  return TorusCertificate{static_cast<int>(x[0].to_long()), beta, static_cast<int>(x[1].to_long())};
}

TwistedCubicCheck verify_twisted_cubic_family(const std::optional<Rational>& a) {
  if (a && a->is_zero()) throw std::invalid_argument("verify_twisted_cubic_family: a must be nonzero");
  const auto curve = a ? twisted_cubic_member(*a) : twisted_cubic_family();
  TwistedCubicCheck out;
  out.on_quadric = on_quadric(curve);
  const auto cert = torus_certificate(curve, 0);
  if (!cert) throw ConsistencyError("verify_twisted_cubic_family: no integer torus certificate");
  out.certificate = *cert;
  return out;
}

// ---- scrolls -------------------------------------------------------------------------

const char* to_string(ScrollCase c) { return c == ScrollCase::ii ? "ii" : "iii"; }

const std::vector<std::string>& scroll_variables() {
  static const std::vector<std::string> vars = {"z0", "z1", "z2", "z3", "z4", "z5"};
  return vars;
}

std::vector<MultiPoly> catalecticant_minors() {
  const auto& zv = scroll_variables();
  auto z = [&](int i) { return MultiPoly::variable(zv, zv[static_cast<std::size_t>(i)]); };
  const std::array<std::array<int, 4>, 2> cat = {{{0, 1, 2, 4}, {1, 2, 3, 5}}};
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      out.push_back(z(cat[0][i]) * z(cat[1][j]) - z(cat[0][j]) * z(cat[1][i]));
    }
  }
  return out;
}

MultiPoly cone_minor() { return MultiPoly::parse("z0*z2 - z1^2", scroll_variables()); }

ScrollAnalysis scroll_fixed_families(ScrollCase which) {
  ScrollAnalysis s;
  s.which = which;
  s.weights = which == ScrollCase::ii ? std::array<int, 6>{2, 0, -2, -4, 4, 2}
                                      : std::array<int, 6>{4, 0, -4, -8, 2, -2};
  s.section_coordinate = which == ScrollCase::ii ? "vm1m3" : "v1m3";
  std::vector<int> kept;
  const auto frame = hyperplane_weight_frame();
  for (std::size_t i = 0; i < frame.basis.size(); ++i) {
    if (frame.basis.labels()[i] != s.section_coordinate) kept.push_back(frame.basis.weights()[i]);
  }
  s.section_weights = WeightMultiset(kept);

  s.minors = catalecticant_minors();
  const std::span<const int> w(s.weights);
  s.minors_homogeneous = std::all_of(s.minors.begin(), s.minors.end(),
                                     [&](const MultiPoly& m) { return m.is_homogeneous(w); }) &&
                         cone_minor().is_homogeneous(w);
  s.projection_equivariant =
      WeightMultiset({s.weights[0], s.weights[1], s.weights[2], s.weights[4]}) == s.section_weights;

  std::map<int, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < 6; ++i) by_weight[s.weights[i]].push_back(i);
  for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
    if (it->second.size() > 1) s.repeated_weight_groups.push_back(it->second);
  }
  return s;
}

std::array<MultiPoly, 6> scroll_parametrization() {
  const std::vector<std::string> tv = {"t0", "t1", "u0", "u1"};
  const std::array<const char*, 6> text = {"t0^3*u0", "t0^2*t1*u0", "t0*t1^2*u0", "t1^3*u0", "t0*u1", "t1*u1"};
  std::array<MultiPoly, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = MultiPoly::parse(text[i], tv);
  return out;
}

bool catalecticant_check(const std::array<MultiPoly, 6>& param) {
  std::map<std::string, MultiPoly> sub;
  for (std::size_t i = 0; i < 6; ++i) sub.emplace(scroll_variables()[i], param[i]);
  auto minors = catalecticant_minors();
  minors.push_back(cone_minor());
  return std::all_of(minors.begin(), minors.end(), [&](const MultiPoly& m) { return m.substitute(sub).is_zero(); });
}

bool catalecticant_check() { return catalecticant_check(scroll_parametrization()); }

bool weight_reversal_preserves_quadric() {
  const auto& vars = plucker_variables();
  std::map<std::string, MultiPoly> sub;
  for (const auto& idx : plucker_indices()) {
    sub.emplace(plucker_label(idx.first, idx.second), MultiPoly::variable(vars, plucker_label(-idx.second, -idx.first)));
  }
  const auto weights = plucker_basis().weights();
  for (const auto& idx : plucker_indices()) {
    const auto i = plucker_basis().index_of(plucker_label(idx.first, idx.second));
    const auto j = plucker_basis().index_of(plucker_label(-idx.second, -idx.first));
    if (weights[i] != -weights[j]) return false;
  }
  return klein_form().substitute(sub) == klein_form() && hyperplane_form().substitute(sub) == hyperplane_form();
}

// ---- smooth section ---------------------------------------------------------------------

SmoothSectionAnalysis smooth_section_cubics() {
  const auto pb = plucker_basis();
  // Unknowns (s, t, v, w): sv, sw, tv, tw carry the weights of v31, v3m1, v1m3, vm1m3; s + t = 0.
  const std::array<std::array<int, 2>, 4> products = {{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
  const std::array<const char*, 4> targets = {"v31", "v3m1", "v1m3", "vm1m3"};
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t k = 0; k < 4; ++k) {
    Vector r(4, Rational{});
    r[static_cast<std::size_t>(products[k][0])] = 1;
    r[static_cast<std::size_t>(products[k][1])] = 1;
    rows.push_back(r);
    rhs.emplace_back(pb.weight_of(targets[k]));
  }
  rows.push_back({Rational(1), Rational(1), Rational(0), Rational(0)});
  rhs.emplace_back(0);
  const auto m = Matrix::from_rows(rows, 4);
  Vector x;
  if (rank(m) != 4 || !solve(m, rhs, x)) throw ConsistencyError("smooth_section_cubics: no equivariant ruling weights");
  for (const auto& xi : x) {
    if (!xi.is_integer()) throw ConsistencyError("smooth_section_cubics: non-integral ruling weights");
  }
  SmoothSectionAnalysis out;
  out.first_factor = {static_cast<int>(x[0].to_long()), static_cast<int>(x[1].to_long())};
  out.second_factor = {static_cast<int>(x[2].to_long()), static_cast<int>(x[3].to_long())};

  auto sections = [](std::array<int, 2> lin, std::array<int, 2> quad_base) {
    std::vector<int> w;
    const std::array<int, 3> quad = {2 * quad_base[0], quad_base[0] + quad_base[1], 2 * quad_base[1]};
    for (int a : lin) {
      for (int b : quad) w.push_back(a + b);
    }
    return WeightMultiset(w);
  };
  out.bidegree_12 = sections(out.first_factor, out.second_factor);
  out.bidegree_21 = sections(out.second_factor, out.first_factor);

  auto distinct = [](const WeightMultiset& ws) {
    return std::adjacent_find(ws.values().begin(), ws.values().end()) == ws.values().end();
  };
  out.weights_distinct = distinct(out.bidegree_12) && distinct(out.bidegree_21);
  // Distinct weights make every fixed point of the linear system a coordinate point: a single
  // monomial of bidegree (1,2) or (2,1), which is a union of three rulings.
  out.fixed_members_reducible = out.weights_distinct;
  return out;
}

}  // namespace qcurves

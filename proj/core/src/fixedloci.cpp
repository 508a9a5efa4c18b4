#include "qcurves/fixedloci.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcurves/errors.hpp"
#include "qcurves/linalg.hpp"

namespace qcurves {

namespace {

const std::vector<std::string> kLineVars = {"s", "t"};

std::vector<std::string> plane_variables(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

Exponents unit_exponent(std::size_t n, std::size_t i) {
  Exponents e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

// ---- lines --------------------------------------------------------------------------

ParametrizedCurve FixedLine::parametrization() const {
  std::array<MultiPoly, kPlueckerDim> coords;
  const auto s = MultiPoly::variable(kLineVars, "s");
  const auto t = MultiPoly::variable(kLineVars, "t");
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    coords[i] = s * endpoints[0].coordinates()[i] + t * endpoints[1].coordinates()[i];
  }
  return ParametrizedCurve(kLineVars, 2, coords);
}

std::string FixedLine::display() const {
  const auto param = parametrization();
  std::string out = "[";
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    if (i) out += ":";
    out += param.coordinates()[i].to_string();
  }
  return out + "]";
}

std::vector<FixedLine> fixed_lines() {
  const auto points = fixed_points(Ambient::quadric);
  const auto basis = plucker_basis();
  std::vector<FixedLine> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      FixedLine line{'?', {}, {}, {points[i], points[j]}};
      if (!on_quadric(line.parametrization())) continue;
      for (std::size_t k = 0; k < 2; ++k) {
        const auto& c = line.endpoints[k].coordinates();
        const auto nz = static_cast<std::size_t>(
            std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); }) - c.begin());
        line.labels[k] = basis.labels()[nz];
        line.weights[k] = *line.endpoints[k].weight();
      }
      line.tag = static_cast<char>('a' + lines.size());
      lines.push_back(line);
    }
  }
  if (lines.size() != 4) {
    throw ConsistencyError("expected four fixed lines on Q, found " + std::to_string(lines.size()));
  }
  return lines;
}

// ---- conics -------------------------------------------------------------------------

const char* to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::double_line: return "double-line";
    case ConicKind::line_pair: return "pair-of-lines";
    case ConicKind::smooth: return "smooth";
  }
  return "?";
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& conic_ideal_table() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> kTable = {
      {"1-a", {"v1m3", "vm1m3", "v3m3 - 3*v1m1", "v3m3*v1m1"}},
      {"1-b", {"v3m1", "vm1m3", "v3m3 - 3*v1m1", "v3m3*v1m1"}},
      {"1-c", {"v31", "v1m3", "v3m3 - 3*v1m1", "v3m3*v1m1"}},
      {"1-d", {"v31", "v3m1", "v3m3 - 3*v1m1", "v3m3*v1m1"}},
      {"2-a", {"vm1m3", "v3m3", "v1m1", "v3m1*v1m3"}},
      {"2-b", {"v1m3", "v3m3", "v1m1", "v31*vm1m3"}},
      {"2-c", {"v3m1", "v3m3", "v1m1", "v31*vm1m3"}},
      {"2-d", {"v31", "v3m3", "v1m1", "v3m1*v1m3"}},
      {"3-a", {"v31", "vm1m3", "v3m3 - 3*v1m1", "v3m1*v1m3 - v3m3*v1m1"}},
      {"3-b", {"v3m1", "v1m3", "v3m3 - 3*v1m1", "v31*vm1m3 + v3m3*v1m1"}},
  };
  return kTable;
}

std::string FixedConic::ideal_text() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ", ";
    s += generators[i].to_string();
  }
  return s + ">";
}

bool FixedConic::contains(const PlueckerPoint& p) const {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const MultiPoly& g) { return evaluate(g, p).is_zero(); });
}

bool FixedConic::contains(const ParametrizedCurve& c) const {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const MultiPoly& g) { return c.pull_back(g).is_zero(); });
}

MultiPoly restrict_to_span(const MultiPoly& form, const std::vector<PlueckerVector>& vectors) {
  const auto vars = plane_variables(vectors.size());
  std::map<std::string, MultiPoly> assignment;
  for (std::size_t k = 0; k < kPlueckerDim; ++k) {
    MultiPoly image(vars);
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      image.add_term(unit_exponent(vars.size(), j), vectors[j][k]);
    }
    assignment.emplace(plucker_variables()[k], std::move(image));
  }
  return form.in_variables(plucker_variables()).substitute(assignment);
}

namespace {

// Weight basis of the common kernel of weight-homogeneous linear forms.
void plane_basis(const std::vector<MultiPoly>& linear, FixedConic& conic) {
  const auto basis = plucker_basis();
  std::vector<int> weights;
  for (int w : basis.weights()) {
    if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(w);
  }
  std::vector<std::string> labels;
  std::vector<int> plane_weights;
  for (int w : weights) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < kPlueckerDim; ++i) {
      if (basis.weights()[i] == w) coords.push_back(i);
    }
    Matrix m(linear.size(), coords.size());
    for (std::size_t r = 0; r < linear.size(); ++r) {
      for (std::size_t k = 0; k < coords.size(); ++k) {
        m(r, k) = linear[r].coefficient(unit_exponent(kPlueckerDim, coords[k]));
      }
    }
    for (const auto& kv : nullspace(m)) {
      PlueckerVector v;
      std::size_t support = 0;
      std::size_t last = 0;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        v[coords[k]] = kv[k];
        if (!kv[k].is_zero()) {
          ++support;
          last = coords[k];
        }
      }
      const PlueckerPoint p(v);
      conic.plane_vectors.push_back(p.normalized());
      labels.push_back(support == 1 ? basis.labels()[last] : "q" + weight_index_label(w));
      plane_weights.push_back(w);
    }
  }
  conic.plane = WeightedBasis(std::move(labels), std::move(plane_weights));
}

std::size_t quadratic_form_rank(const MultiPoly& q) {
  const std::size_t n = q.variables().size();
  Matrix m(n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    }
    if (idx.size() != 2) throw std::invalid_argument("quadratic_form_rank: not a quadratic form");
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) += c;
    } else {
      m(idx[0], idx[1]) += c / Rational(2);
      m(idx[1], idx[0]) += c / Rational(2);
    }
  }
  return rank(m);
}

}  // namespace

FixedConic analyze_conic(const std::string& tag, const std::vector<MultiPoly>& generators) {
  auto fail = [&](const std::string& what) -> ConsistencyError {
    return ConsistencyError("conic (" + tag + "): " + what);
  };
  FixedConic conic;
  conic.tag = tag;
  const auto weights = plucker_basis().weights();
  std::vector<MultiPoly> linear;
  std::vector<MultiPoly> quadric;
  for (const auto& g0 : generators) {
    const auto g = g0.in_variables(plucker_variables());
    conic.generators.push_back(g);
    if (!g.is_homogeneous(weights)) throw fail(g.to_string() + " is not weight-homogeneous");
    const auto deg = g.total_degree();
    if (deg == 1) {
      linear.push_back(g);
    } else if (deg == 2) {
      quadric.push_back(g);
    } else {
      throw fail(g.to_string() + " is neither linear nor quadratic");
    }
  }
  if (quadric.size() != 1) throw fail("expected exactly one quadric generator");

  plane_basis(linear, conic);
  if (conic.plane.size() != 3) throw fail("linear generators cut out a space of dimension " +
                                          std::to_string(conic.plane.size()));

  conic.plane_equation = restrict_to_span(quadric.front(), conic.plane_vectors);
  if (conic.plane_equation.is_zero()) throw fail("quadric generator vanishes on the plane");

  // Q's equations lie in the ideal iff they restrict to multiples of the conic equation.
  if (!restrict_to_span(hyperplane_form(), conic.plane_vectors).is_zero()) {
    throw fail("hyperplane form is not in the ideal");
  }
  const auto klein = restrict_to_span(klein_form(), conic.plane_vectors);
  const auto& [lead_e, lead_c] = *conic.plane_equation.terms().begin();
  const Rational ratio = klein.coefficient(lead_e) / lead_c;
  if (ratio.is_zero() || !(klein - conic.plane_equation * ratio).is_zero()) {
    throw fail("Klein form is not in the ideal");
  }

  std::vector<int> dual_weights;
  for (int w : conic.plane.weights()) dual_weights.push_back(-w);
  const auto q = conic.plane_equation.homogeneous_weight(dual_weights);
  if (!q) throw fail("restricted equation is not weight-homogeneous");
  conic.equation_weight = static_cast<int>(*q);

  switch (quadratic_form_rank(conic.plane_equation)) {
    case 1: conic.kind = ConicKind::double_line; break;
    case 2: conic.kind = ConicKind::line_pair; break;
    case 3: conic.kind = ConicKind::smooth; break;
    default: throw fail("degenerate plane equation");
  }
  return conic;
}

std::vector<std::array<PlueckerPoint, 3>> fixed_planes() {
  const auto pts = fixed_points(Ambient::hyperplane);
  std::vector<std::array<PlueckerPoint, 3>> planes;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) planes.push_back({pts[i], pts[j], pts[k]});
    }
  }
  return planes;
}

namespace {

bool same_span(const std::vector<PlueckerVector>& a, const std::array<PlueckerPoint, 3>& b) {
  std::vector<Vector> rows;
  for (const auto& v : a) rows.emplace_back(v.begin(), v.end());
  const std::size_t ra = rank(Matrix::from_rows(rows, kPlueckerDim));
  for (const auto& p : b) rows.emplace_back(p.coordinates().begin(), p.coordinates().end());
  return ra == 3 && rank(Matrix::from_rows(rows, kPlueckerDim)) == 3;
}

}  // namespace

std::vector<FixedConic> fixed_conics() {
  std::vector<FixedConic> conics;
  for (const auto& [tag, texts] : conic_ideal_table()) {
    std::vector<MultiPoly> gens;
    for (const auto& t : texts) gens.push_back(plucker_form(t));
    conics.push_back(analyze_conic(tag, gens));
  }

  const auto planes = fixed_planes();
  std::vector<bool> used(planes.size(), false);
  for (const auto& c : conics) {
    bool matched = false;
    for (std::size_t i = 0; i < planes.size() && !matched; ++i) {
      if (!used[i] && same_span(c.plane_vectors, planes[i])) used[i] = matched = true;
    }
    if (!matched) throw ConsistencyError("conic (" + c.tag + "): plane is not a torus-fixed plane of H");
  }
  if (std::count(used.begin(), used.end(), true) != static_cast<long>(planes.size())) {
    throw ConsistencyError("some torus-fixed plane of H carries no listed conic");
  }
  return conics;
}

}  // namespace qcurves

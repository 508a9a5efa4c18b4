#include "qcurves/quadric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qcurves/errors.hpp"
#include "qcurves/linalg.hpp"

namespace qcurves {

// ---- PlueckerPoint ----------------------------------------------------------

PlueckerPoint::PlueckerPoint(const PlueckerVector& coords) : coords_(coords) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x.is_zero(); })) {
    throw std::invalid_argument("PlueckerPoint: all coordinates are zero");
  }
}

PlueckerPoint PlueckerPoint::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("PlueckerPoint: expected [a:b:c:d:e:f], got " + text);
  }
  PlueckerVector v;
  std::size_t start = 1;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    const std::size_t end = text.find(i + 1 < kPlueckerDim ? ':' : ']', start);
    if (end == std::string::npos) throw std::invalid_argument("PlueckerPoint: too few coordinates in " + text);
    v[i] = Rational::parse(text.substr(start, end - start));
    start = end + 1;
  }
  if (start != text.size()) throw std::invalid_argument("PlueckerPoint: too many coordinates in " + text);
  return PlueckerPoint(v);
}

PlueckerVector PlueckerPoint::normalized() const {
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& x) { return !x.is_zero(); });
  const Rational inv = lead->inverse();
  PlueckerVector out;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) out[i] = coords_[i] * inv;
  return out;
}

std::string PlueckerPoint::to_string() const {
  Integer lcm = 1;
  for (const auto& x : coords_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  std::array<Integer, kPlueckerDim> ints;
  Integer g = 0;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    ints[i] = coords_[i].numerator() * (lcm / coords_[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  const auto lead = std::find_if(ints.begin(), ints.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) g = -g;
  std::string s = "[";
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    if (i) s += ":";
    s += Integer(ints[i] / g).get_str();
  }
  return s + "]";
}

std::optional<int> PlueckerPoint::weight() const {
  const auto basis = plucker_basis();
  std::optional<int> w;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) {
    if (coords_[i].is_zero()) continue;
    if (w && *w != basis.weights()[i]) return std::nullopt;
    w = basis.weights()[i];
  }
  return w;
}

// ---- ParametrizedCurve ----------------------------------------------------------

ParametrizedCurve::ParametrizedCurve(std::vector<std::string> variables, std::size_t homogeneous_count,
                                     std::array<MultiPoly, kPlueckerDim> coords)
    : vars_(std::move(variables)), homogeneous_count_(homogeneous_count), coords_(std::move(coords)) {
  if (homogeneous_count_ == 0 || homogeneous_count_ > vars_.size()) {
    throw std::invalid_argument("ParametrizedCurve: bad homogeneous variable count");
  }
  std::vector<int> grading(vars_.size(), 0);
  std::fill_n(grading.begin(), homogeneous_count_, 1);
  std::optional<long> deg;
  for (auto& c : coords_) {
    if (c.variables() != vars_) c = c.in_variables(vars_);
    if (c.is_zero()) continue;
    const auto d = c.homogeneous_weight(grading);
    if (!d || (deg && *deg != *d)) {
      throw std::invalid_argument("ParametrizedCurve: coordinates are not homogeneous of a common degree");
    }
    deg = d;
  }
  if (!deg) throw std::invalid_argument("ParametrizedCurve: all coordinates vanish identically");
  degree_ = *deg;
}

ParametrizedCurve ParametrizedCurve::parse(std::vector<std::string> variables, std::size_t homogeneous_count,
                                           const std::array<std::string, kPlueckerDim>& coords) {
  std::array<MultiPoly, kPlueckerDim> polys;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) polys[i] = MultiPoly::parse(coords[i], variables);
  return ParametrizedCurve(std::move(variables), homogeneous_count, std::move(polys));
}

std::map<std::string, MultiPoly> ParametrizedCurve::assignment() const {
  std::map<std::string, MultiPoly> out;
  for (std::size_t i = 0; i < kPlueckerDim; ++i) out.emplace(plucker_variables()[i], coords_[i]);
  return out;
}

MultiPoly ParametrizedCurve::pull_back(const MultiPoly& form) const {
  return form.in_variables(plucker_variables()).substitute(assignment());
}

// ---- forms and membership ----------------------------------------------------------

MultiPoly plucker_form(const std::string& text) { return MultiPoly::parse(text, plucker_variables()); }

MultiPoly klein_form() {
  // p01*p23 - p02*p13 + p03*p12 on the basis v3, v1, vm1, vm3 of V.
  const auto v = symd_basis(3);
  const auto& idx = v.weights();
  auto p = [&](int i, int j) {
    return MultiPoly::variable(plucker_variables(), plucker_label(idx[i], idx[j]));
  };
  return p(0, 1) * p(2, 3) - p(0, 2) * p(1, 3) + p(0, 3) * p(1, 2);
}

MultiPoly hyperplane_form() { return invariant_hyperplane(); }

Rational evaluate(const MultiPoly& form, const PlueckerPoint& p) {
  const auto& c = p.coordinates();
  return form.in_variables(plucker_variables()).evaluate(std::span<const Rational>(c.data(), c.size()));
}

bool on_grassmannian(const PlueckerPoint& p) { return evaluate(klein_form(), p).is_zero(); }
bool on_hyperplane(const PlueckerPoint& p) { return evaluate(hyperplane_form(), p).is_zero(); }
bool on_quadric(const PlueckerPoint& p) { return on_grassmannian(p) && on_hyperplane(p); }

bool on_quadric(const ParametrizedCurve& c) {
  return c.pull_back(klein_form()).is_zero() && c.pull_back(hyperplane_form()).is_zero();
}

PlueckerVector unit_vector(std::size_t i) {
  PlueckerVector v;
  v.at(i) = 1;
  return v;
}

// ---- fixed points ---------------------------------------------------------------------

WeightedFrame hyperplane_weight_frame() {
  const auto basis = plucker_basis();
  const auto h = hyperplane_form();
  std::set<int, std::greater<>> weights(basis.weights().begin(), basis.weights().end());

  WeightedFrame frame;
  std::vector<std::string> labels;
  std::vector<int> frame_weights;
  for (int w : weights) {
    std::vector<std::size_t> coords;
    for (std::size_t i = 0; i < kPlueckerDim; ++i) {
      if (basis.weights()[i] == w) coords.push_back(i);
    }
    Matrix row(1, coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k) {
      row(0, k) = h.coefficient([&] {
        Exponents e(kPlueckerDim, 0);
        e[coords[k]] = 1;
        return e;
      }());
    }
    const auto kernel = nullspace(row);
    if (kernel.size() != 1) {
      throw ConsistencyError("W1 weight space of weight " + std::to_string(w) + " has dimension " +
                             std::to_string(kernel.size()));
    }
    PlueckerVector v;
    for (std::size_t k = 0; k < coords.size(); ++k) v[coords[k]] = kernel[0][k];
    frame.vectors.push_back(PlueckerPoint(v).normalized());
    labels.push_back(coords.size() == 1 ? basis.labels()[coords[0]] : "q" + weight_index_label(w));
    frame_weights.push_back(w);
  }
  frame.basis = WeightedBasis(std::move(labels), std::move(frame_weights));
  return frame;
}

std::vector<PlueckerPoint> fixed_points(Ambient space) {
  std::vector<PlueckerPoint> out;
  const auto frame = hyperplane_weight_frame();
  for (const auto& v : frame.vectors) {
    PlueckerPoint p(v);
    if (space == Ambient::hyperplane || on_quadric(p)) out.push_back(p);
  }
  return out;
}

}  // namespace qcurves

#include "qcurves/rep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qcurves/errors.hpp"

namespace qcurves {

// ---- WeightedBasis ----------------------------------------------------------

WeightedBasis::WeightedBasis(std::vector<std::string> labels, std::vector<int> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.size() != weights_.size()) {
    throw std::invalid_argument("WeightedBasis: labels and weights differ in length");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) throw std::invalid_argument("WeightedBasis: duplicate label " + labels_[i]);
    }
  }
}

bool WeightedBasis::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t WeightedBasis::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("WeightedBasis: no label " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

// ---- WeightMultiset ---------------------------------------------------------

WeightMultiset::WeightMultiset(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

WeightMultiset WeightMultiset::parse(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("WeightMultiset: empty entry in '" + text + "'");
    std::size_t used = 0;
    out.push_back(std::stoi(item.substr(b), &used));
    if (item.find_first_not_of(" \t", b + used) != std::string::npos) {
      throw std::invalid_argument("WeightMultiset: bad entry '" + item + "'");
    }
  }
  return WeightMultiset(std::move(out));
}

std::size_t WeightMultiset::count(int w) const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), w));
}

std::size_t WeightMultiset::count_negative() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](int w) { return w < 0; }));
}

std::size_t WeightMultiset::count_positive() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](int w) { return w > 0; }));
}

bool WeightMultiset::contains(const WeightMultiset& sub) const {
  return std::includes(values_.begin(), values_.end(), sub.values_.begin(), sub.values_.end());
}

WeightMultiset WeightMultiset::minus(const WeightMultiset& sub) const {
  if (!contains(sub)) {
    throw ConsistencyError("weight multiset {" + sub.to_string() + "} does not embed in {" + to_string() + "}");
  }
  std::vector<int> out;
  std::set_difference(values_.begin(), values_.end(), sub.values_.begin(), sub.values_.end(),
                      std::back_inserter(out));
  return WeightMultiset(std::move(out));
}

WeightMultiset WeightMultiset::plus(const WeightMultiset& other) const {
  std::vector<int> out = values_;
  out.insert(out.end(), other.values_.begin(), other.values_.end());
  return WeightMultiset(std::move(out));
}

WeightMultiset WeightMultiset::shifted(int delta) const {
  std::vector<int> out = values_;
  for (auto& w : out) w += delta;
  return WeightMultiset(std::move(out));
}

std::string WeightMultiset::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values_[i]);
  }
  return s;
}

// ---- sl2 on Sym^d ------------------------------------------------------------

const char* to_string(Sl2Generator g) {
  switch (g) {
    case Sl2Generator::e: return "e";
    case Sl2Generator::f: return "f";
    case Sl2Generator::h: return "h";
  }
  return "?";
}

std::string weight_index_label(int k) {
  return k < 0 ? "m" + std::to_string(-k) : std::to_string(k);
}

WeightedBasis symd_basis(int d) {
  if (d < 0) throw std::invalid_argument("symd_basis: negative degree");
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (int i = 0; i <= d; ++i) {
    labels.push_back("v" + weight_index_label(d - 2 * i));
    weights.push_back(d - 2 * i);
  }
  return WeightedBasis(std::move(labels), std::move(weights));
}

LinearAction sl2_operator(Sl2Generator op, int d) {
  LinearAction act{symd_basis(d), Matrix(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(d + 1))};
  for (int i = 0; i <= d; ++i) {
    const auto col = static_cast<std::size_t>(i);
    switch (op) {
      case Sl2Generator::e:
        if (i > 0) act.matrix(col - 1, col) = i;
        break;
      case Sl2Generator::f:
        if (i < d) act.matrix(col + 1, col) = d - i;
        break;
      case Sl2Generator::h:
        act.matrix(col, col) = d - 2 * i;
        break;
    }
  }
  return act;
}

// ---- induced bases -------------------------------------------------------------

WeightedBasis dual(const WeightedBasis& a) {
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (std::size_t i = 0; i < a.size(); ++i) {
    labels.push_back(a.labels()[i] + "*");
    weights.push_back(-a.weights()[i]);
  }
  return WeightedBasis(std::move(labels), std::move(weights));
}

WeightedBasis tensor(const WeightedBasis& a, const WeightedBasis& b) {
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      labels.push_back("(" + a.labels()[i] + ")x(" + b.labels()[j] + ")");
      weights.push_back(a.weights()[i] + b.weights()[j]);
    }
  }
  return WeightedBasis(std::move(labels), std::move(weights));
}

WeightedBasis wedge2(const WeightedBasis& a) {
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      labels.push_back("(" + a.labels()[i] + ")^(" + a.labels()[j] + ")");
      weights.push_back(a.weights()[i] + a.weights()[j]);
    }
  }
  return WeightedBasis(std::move(labels), std::move(weights));
}

WeightedBasis sym2(const WeightedBasis& a) {
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      labels.push_back("(" + a.labels()[i] + ").(" + a.labels()[j] + ")");
      weights.push_back(a.weights()[i] + a.weights()[j]);
    }
  }
  return WeightedBasis(std::move(labels), std::move(weights));
}

WeightedBasis hom(const WeightedBasis& a, const WeightedBasis& b) { return tensor(dual(a), b); }

WeightedBasis quotient(const WeightedBasis& a, const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    if (!a.contains(l)) throw std::invalid_argument("quotient: label " + l + " not in basis");
  }
  std::vector<std::string> keep;
  std::vector<int> weights;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::find(labels.begin(), labels.end(), a.labels()[i]) != labels.end()) continue;
    keep.push_back(a.labels()[i]);
    weights.push_back(a.weights()[i]);
  }
  return WeightedBasis(std::move(keep), std::move(weights));
}

// ---- Pluecker space ------------------------------------------------------------

const std::vector<PlueckerIndex>& plucker_indices() {
  static const std::vector<PlueckerIndex> kIndices = {{3, 1}, {3, -1}, {3, -3}, {1, -1}, {1, -3}, {-1, -3}};
  return kIndices;
}

std::string plucker_label(int a, int b) { return "v" + weight_index_label(a) + weight_index_label(b); }

const std::vector<std::string>& plucker_variables() {
  static const std::vector<std::string> kVars = [] {
    std::vector<std::string> v;
    for (const auto& [a, b] : plucker_indices()) v.push_back(plucker_label(a, b));
    return v;
  }();
  return kVars;
}

WeightedBasis plucker_basis() {
  std::vector<int> weights;
  for (const auto& [a, b] : plucker_indices()) weights.push_back(a + b);
  return WeightedBasis(plucker_variables(), std::move(weights));
}

namespace {

constexpr int kPlueckerDegree = 3;

std::size_t sym3_position(int k) {
  if (k > kPlueckerDegree || k < -kPlueckerDegree || (kPlueckerDegree - k) % 2 != 0) {
    throw std::invalid_argument("not a weight of Sym^3: " + std::to_string(k));
  }
  return static_cast<std::size_t>((kPlueckerDegree - k) / 2);
}

// Adds c * v_a ^ v_b to `out`, rewriting into the a > b normal form.
void add_wedge(MultiPoly& out, int a, int b, const Rational& c) {
  if (a == b || c.is_zero()) return;
  const bool flip = a < b;
  const std::string name = flip ? plucker_label(b, a) : plucker_label(a, b);
  out += MultiPoly::variable(plucker_variables(), name) * (flip ? -c : c);
}

}  // namespace

MultiPoly wedge2_operator_action(Sl2Generator op, int i, int j) {
  const bool flip = i < j;
  const int a = flip ? j : i;
  const int b = flip ? i : j;
  if (std::find(plucker_indices().begin(), plucker_indices().end(), PlueckerIndex{a, b}) ==
      plucker_indices().end()) {
    throw std::invalid_argument("wedge2_operator_action: (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not a Pluecker label");
  }
  const auto action = sl2_operator(op, kPlueckerDegree);
  const auto& weights = action.basis.weights();

  MultiPoly out(plucker_variables());
  const std::size_t pa = sym3_position(a);
  const std::size_t pb = sym3_position(b);
  for (std::size_t r = 0; r < weights.size(); ++r) {
    add_wedge(out, weights[r], b, action.matrix(r, pa));
    add_wedge(out, a, weights[r], action.matrix(r, pb));
  }
  return flip ? -out : out;
}

MultiPoly wedge2_operator_action(Sl2Generator op, const MultiPoly& linear_form) {
  const auto lf = linear_form.in_variables(plucker_variables());
  MultiPoly out(plucker_variables());
  for (const auto& [e, c] : lf.terms()) {
    const auto it = std::find(e.begin(), e.end(), 1);
    if (it == e.end() || std::count(e.begin(), e.end(), 0) != static_cast<long>(e.size() - 1)) {
      throw std::invalid_argument("wedge2_operator_action: " + linear_form.to_string() + " is not linear");
    }
    const auto& [a, b] = plucker_indices()[static_cast<std::size_t>(it - e.begin())];
    out += wedge2_operator_action(op, a, b) * c;
  }
  return out;
}

MultiPoly invariant_hyperplane() {
  const auto basis = plucker_basis();
  std::vector<std::size_t> zero_weight;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis.weights()[k] == 0) zero_weight.push_back(k);
  }

  // Column k: coordinates of e acting on the k-th weight-0 label.
  Matrix m(basis.size(), zero_weight.size());
  for (std::size_t k = 0; k < zero_weight.size(); ++k) {
    const auto& [a, b] = plucker_indices()[zero_weight[k]];
    const auto image = wedge2_operator_action(Sl2Generator::e, a, b);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      Exponents ex(basis.size(), 0);
      ex[r] = 1;
      m(r, k) = image.coefficient(ex);
    }
  }
  const auto kernel = nullspace(m);
  if (kernel.size() != 1) {
    throw ConsistencyError("invariant hyperplane: e-kernel on weight 0 has dimension " +
                           std::to_string(kernel.size()));
  }

  MultiPoly form(plucker_variables());
  for (std::size_t k = 0; k < zero_weight.size(); ++k) {
    Exponents ex(basis.size(), 0);
    ex[zero_weight[k]] = 1;
    form.add_term(ex, kernel[0][k]);
  }
  form *= form.terms().begin()->second.inverse();

  if (!wedge2_operator_action(Sl2Generator::f, form).is_zero()) {
    throw ConsistencyError("invariant hyperplane: " + form.to_string() + " is not f-invariant");
  }
  return form;
}

}  // namespace qcurves

#include "qcurves/tangent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "qcurves/errors.hpp"
#include "qcurves/quadric.hpp"

namespace qcurves {

std::string TangentRow::ambient_text() const {
  std::string out;
  for (std::size_t i = 0; i < ambient_blocks.size(); ++i) {
    if (i > 0) out += " | ";
    out += ambient_blocks[i].to_string();
  }
  return out;
}

namespace {

TangentRow finish_row(std::string tag, std::vector<WeightMultiset> blocks, WeightMultiset sections) {
  TangentRow row;
  row.tag = std::move(tag);
  for (const auto& b : blocks) row.ambient = row.ambient.plus(b);
  row.ambient_blocks = std::move(blocks);
  row.sections = std::move(sections);
  if (!row.ambient.contains(row.sections)) {
    throw ConsistencyError("tangent row (" + row.tag + "): section weights " + row.sections.to_string() +
                           " do not embed in ambient weights " + row.ambient.to_string());
  }
  row.moduli = row.ambient.minus(row.sections);
  row.delta = row.moduli.count_negative();
  return row;
}

}  // namespace

TangentRow line_tangent_row(const FixedLine& line) {
  const auto w1 = hyperplane_weight_frame().basis;
  const auto span = line.span();
  const auto rest = quotient(w1, span.labels());
  return finish_row(line.id(), {WeightMultiset::of(hom(span, rest))}, WeightMultiset::of(sym2(dual(span))));
}

TangentRow conic_tangent_row(const FixedConic& conic) {
  const auto w1 = hyperplane_weight_frame().basis;
  const auto& u = conic.plane;
  const int q = conic.equation_weight;
  const auto quadrics = WeightMultiset::of(sym2(dual(u)));
  if (quadrics.count(q) == 0) {
    throw ConsistencyError("tangent row (" + conic.tag + "): equation weight " + std::to_string(q) +
                           " is not a weight of Sym^2 of the dual plane");
  }
  const auto sections = quadrics.without_one(q);
  return finish_row(conic.tag, {WeightMultiset::of(hom(u, quotient(w1, u.labels()))), sections.shifted(-q)},
                    sections);
}

std::vector<TangentRow> line_rows() {
  std::vector<TangentRow> rows;
  for (const auto& l : fixed_lines()) rows.push_back(line_tangent_row(l));
  return rows;
}

std::vector<TangentRow> conic_rows() {
  std::vector<TangentRow> rows;
  for (const auto& c : fixed_conics()) rows.push_back(conic_tangent_row(c));
  return rows;
}

// ---- BB ---------------------------------------------------------------------------------

const char* to_string(ComponentKind k) {
  return k == ComponentKind::isolated ? "isolated-point" : "projective-line";
}

PoincarePolynomial::PoincarePolynomial(std::vector<long> coefficients) : coeffs_(std::move(coefficients)) {
  for (long c : coeffs_) {
    if (c < 0) throw std::invalid_argument("PoincarePolynomial: negative coefficient");
  }
  trim();
}

void PoincarePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool PoincarePolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

long PoincarePolynomial::value_at_one() const {
  long s = 0;
  for (long c : coeffs_) s += c;
  return s;
}

PoincarePolynomial& PoincarePolynomial::operator+=(const PoincarePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

std::string PoincarePolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const long c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PoincarePolynomial PoincarePolynomial::parse(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("PoincarePolynomial: cannot parse '" + text + "'"); };
  std::vector<long> coeffs;
  if (text.empty()) throw bad();
  if (text == "0") return PoincarePolynomial();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string::npos) end = text.size();
    const std::string term = text.substr(pos, end - pos);
    if (term.empty()) throw bad();
    std::size_t i = 0;
    long c = 1;
    bool has_digits = false;
    long num = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
      num = num * 10 + (term[i] - '0');
      ++i;
      has_digits = true;
    }
    if (has_digits) c = num;
    std::size_t exp = 0;
    if (i < term.size()) {
      if (term[i] != 't') throw bad();
      ++i;
      exp = 1;
      if (i < term.size()) {
        if (term[i] != '^' || i + 1 == term.size()) throw bad();
        exp = 0;
        for (++i; i < term.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(term[i]))) throw bad();
          exp = exp * 10 + static_cast<std::size_t>(term[i] - '0');
        }
      }
    } else if (!has_digits) {
      throw bad();
    }
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
    coeffs[exp] += c;
    pos = end + 1;
    if (end + 1 == text.size()) throw bad();
  }
  return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial bb_poincare(const std::vector<BBComponent>& components) {
  PoincarePolynomial p;
  for (const auto& c : components) {
    std::vector<long> term(2 * c.delta + 1, 0);
    term[2 * c.delta] = 1;
    if (c.kind == ComponentKind::projective_line) term.push_back(0), term.push_back(1);
    p += PoincarePolynomial(std::move(term));
  }
  return p;
}

long euler_characteristic(const std::vector<BBComponent>& components) {
  long chi = 0;
  for (const auto& c : components) chi += c.kind == ComponentKind::isolated ? 1 : 2;
  return chi;
}

std::vector<BBComponent> components_of(const std::vector<TangentRow>& rows) {
  std::vector<BBComponent> out;
  for (const auto& r : rows) {
    if (r.moduli.count(0) != 0) {
      throw ConsistencyError("tangent row (" + r.tag + "): zero weight at a fixed point assumed isolated");
    }
    out.push_back({r.tag, ComponentKind::isolated, r.delta});
  }
  return out;
}

std::vector<BBComponent> census_components(const CubicCensus& census) {
  std::vector<BBComponent> out;
  for (int i = 0; i < census.isolated; ++i) out.push_back({"isolated-" + std::to_string(i + 1), ComponentKind::isolated, 0});
  for (int i = 0; i < census.families; ++i) out.push_back({"family-" + std::to_string(i + 1), ComponentKind::projective_line, 0});
  return out;
}

// ---- zero weights -------------------------------------------------------------------------

ZeroWeightChain zero_weight_chain() {
  const WeightedBasis domain({"u", "v"}, {1, -1});
  constexpr int kShift = -1;
  constexpr int kDegree = 3;
  ZeroWeightChain z;

  const auto f = ParametrizedCurve::parse({"u", "v"}, 2, {"u^3", "u^2*v", "3*u*v^2", "u*v^2", "3*v^3", "0"});
  const auto cert = torus_certificate(f, domain.weights()[1]);
  z.equivariant = cert && cert->alpha == domain.weights()[0] && cert->lambda == kShift && on_quadric(f);
  if (!z.equivariant) throw ConsistencyError("zero_weight_chain: f is not equivariant for the prescribed weights");

  auto binary_forms = [&](int d) {
    std::vector<int> w;
    for (int i = d; i >= 0; --i) w.push_back(i * domain.weights()[0] + (d - i) * domain.weights()[1]);
    return WeightMultiset(w);
  };
  const auto cubics = binary_forms(kDegree);
  const auto codomain = WeightMultiset::of(hyperplane_weight_frame().basis).shifted(kShift);

  int pairs = 0;
  for (int s : cubics.values()) pairs += static_cast<int>(codomain.count(s));
  z.w0_T_P4 = pairs - 1;  // minus H^0(O), which has weight zero

  std::vector<int> shifted(plucker_basis().weights());
  for (int& w : shifted) w += kShift;
  const auto klein_weight = klein_form().homogeneous_weight(shifted);
  if (!klein_weight) throw ConsistencyError("zero_weight_chain: Klein form is not homogeneous");
  z.w0_N = static_cast<int>(binary_forms(2 * kDegree).count(static_cast<int>(*klein_weight)));

  z.w0_T_Q = z.w0_T_P4 - z.w0_N;
  z.w0_T_P1 = static_cast<int>(WeightMultiset::of(hom(domain, domain)).without_one(0).count(0));
  z.w0_moduli = z.w0_T_Q - z.w0_T_P1;
  return z;
}

}  // namespace qcurves

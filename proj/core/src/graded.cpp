#include "qcurves/graded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qcurves/linalg.hpp"

namespace qcurves {

GradedIdeal::GradedIdeal(std::vector<std::string> variables, std::vector<int> degrees,
                         std::vector<MultiPoly> generators)
    : vars_(std::move(variables)), degrees_(std::move(degrees)), gens_(std::move(generators)) {
  if (vars_.size() != degrees_.size()) {
    throw std::invalid_argument("GradedIdeal: one degree per variable required");
  }
  if (std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d <= 0; })) {
    throw std::invalid_argument("GradedIdeal: variable degrees must be positive");
  }
  for (auto& g : gens_) {
    if (g.variables() != vars_) g = g.in_variables(vars_);
  }
}

GradedIdeal GradedIdeal::with_generator(MultiPoly g) const {
  auto gens = gens_;
  gens.push_back(std::move(g));
  return GradedIdeal(vars_, degrees_, std::move(gens));
}

std::optional<std::size_t> GradedIdeal::first_inhomogeneous() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    const bool laurent = std::any_of(g.terms().begin(), g.terms().end(), [](const auto& t) {
      return std::any_of(t.first.begin(), t.first.end(), [](int e) { return e < 0; });
    });
    if (laurent || !g.is_homogeneous(degrees_)) return i;
  }
  return std::nullopt;
}

void GradedIdeal::require_homogeneous() const {
  if (const auto bad = first_inhomogeneous()) {
    throw std::invalid_argument("GradedIdeal: generator " + std::to_string(*bad) + " (" +
                                gens_[*bad].to_string() + ") is not homogeneous");
  }
}

long GradedIdeal::generator_degree(std::size_t i) const {
  const auto w = gens_.at(i).homogeneous_weight(degrees_);
  if (!w) throw std::invalid_argument("GradedIdeal: generator " + std::to_string(i) + " is not homogeneous");
  return *w;
}

namespace {

void enumerate(const std::vector<int>& degrees, std::size_t i, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (i + 1 == degrees.size()) {
    if (remaining % degrees[i] == 0) {
      cur[i] = remaining / degrees[i];
      out.push_back(cur);
    }
    return;
  }
  for (int k = remaining / degrees[i]; k >= 0; --k) {
    cur[i] = k;
    enumerate(degrees, i + 1, remaining - k * degrees[i], cur, out);
  }
  cur[i] = 0;
}

// Row-reduced span of the degree-d piece of the ideal, with columns indexed by
// `basis` (largest-first).
struct DegreePiece {
  std::vector<Exponents> basis;
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

DegreePiece degree_piece(const GradedIdeal& ideal, int d) {
  ideal.require_homogeneous();
  DegreePiece piece;
  piece.basis = monomials_of_degree(ideal.degrees(), d);
  std::map<Exponents, std::size_t> column;
  for (std::size_t i = 0; i < piece.basis.size(); ++i) column.emplace(piece.basis[i], i);

  std::vector<Vector> rows;
  for (std::size_t gi = 0; gi < ideal.generators().size(); ++gi) {
    const auto& g = ideal.generators()[gi];
    if (g.is_zero()) continue;
    const long gd = ideal.generator_degree(gi);
    if (gd > d) continue;
    for (const auto& m : monomials_of_degree(ideal.degrees(), static_cast<int>(d - gd))) {
      Vector row(piece.basis.size());
      for (const auto& [e, c] : g.terms()) {
        Exponents prod(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) prod[k] = e[k] + m[k];
        row[column.at(prod)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  piece.reduced = Matrix::from_rows(rows, piece.basis.size());
  piece.pivots = rref(piece.reduced);
  return piece;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(const std::vector<int>& degrees, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (degrees.empty()) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents cur(degrees.size(), 0);
  enumerate(degrees, 0, d, cur, out);
  return out;
}

std::size_t hilbert_dim(const GradedIdeal& ideal, int degree) {
  if (degree < 0) throw std::invalid_argument("hilbert_dim: negative degree");
  const DegreePiece piece = degree_piece(ideal, degree);
  return piece.basis.size() - piece.pivots.size();
}

std::vector<std::size_t> hilbert_function(const GradedIdeal& ideal, int max_degree) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(hilbert_dim(ideal, d));
  return out;
}

MultiPoly normal_form(const GradedIdeal& ideal, const MultiPoly& p) {
  const MultiPoly q = p.variables() == ideal.variables() ? p : p.in_variables(ideal.variables());
  if (q.is_zero()) return q;
  const auto d = q.homogeneous_weight(ideal.degrees());
  if (!d) throw std::invalid_argument("normal_form: " + q.to_string() + " is not homogeneous");

  const DegreePiece piece = degree_piece(ideal, static_cast<int>(*d));
  Vector v(piece.basis.size());
  for (std::size_t i = 0; i < piece.basis.size(); ++i) v[i] = q.coefficient(piece.basis[i]);
  for (std::size_t r = 0; r < piece.pivots.size(); ++r) {
    const Rational factor = v[piece.pivots[r]];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!piece.reduced(r, c).is_zero()) v[c] -= factor * piece.reduced(r, c);
    }
  }
  MultiPoly out(ideal.variables());
  for (std::size_t i = 0; i < v.size(); ++i) out.add_term(piece.basis[i], v[i]);
  return out;
}

}  // namespace qcurves

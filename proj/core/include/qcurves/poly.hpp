#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcurves/rational.hpp"

namespace qcurves {

/// Exponent vector, one entry per ring variable. Negative entries are allowed
/// so that formal parameters may appear with inverse powers (Laurent terms).
using Exponents = std::vector<int>;

/// Graded-lex, largest first: higher total degree wins, ties broken
/// lexicographically in declared variable order.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate (Laurent) polynomial with exact rational coefficients over an
/// ordered list of named variables. Never stores zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exps,
                            const Rational& c = 1);

  /// Parses text such as "v31*vm1m3 - 3/2*a^-1*v^3 + (u - v)^2" over `variables`.
  /// Throws std::invalid_argument on unknown names or malformed input.
  static MultiPoly parse(const std::string& text, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponents& e) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Sum of exponent(i) * weights(i) for every term, if all agree.
  std::optional<long> homogeneous_weight(std::span<const int> weights) const;
  bool is_homogeneous(std::span<const int> weights) const;
  std::optional<long> total_degree() const;

  /// Replaces every variable occurring in the polynomial by its image. All
  /// images must share one variable list, which becomes the result's.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Same polynomial over a different variable list (matched by name).
  MultiPoly in_variables(const std::vector<std::string>& variables) const;

  MultiPoly pow(unsigned n) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  /// Coefficient-wise equality; variable lists must also agree.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Canonical text: terms largest-first in graded-lex order, coefficients as
  /// num/den, e.g. "v31*vm1m3 - v3m1*v1m3 + v3m3*v1m1".
  std::string to_string() const;

  void add_term(const Exponents& e, const Rational& c);

 private:
  void require_same_ring(const MultiPoly& other, const char* op) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::string monomial_to_string(const std::vector<std::string>& vars, const Exponents& e);

}  // namespace qcurves

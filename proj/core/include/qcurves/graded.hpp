#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcurves/poly.hpp"

namespace qcurves {

/// Homogeneous ideal in a polynomial ring graded by positive per-variable
/// degrees. Homogeneity of the generators is checked by the operations that
/// rely on it, not at construction.
class GradedIdeal {
 public:
  GradedIdeal(std::vector<std::string> variables, std::vector<int> degrees,
              std::vector<MultiPoly> generators = {});

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  GradedIdeal with_generator(MultiPoly g) const;

  /// Index of the first generator that is not homogeneous (or has negative
  /// exponents), if any.
  std::optional<std::size_t> first_inhomogeneous() const;

  /// Throws std::invalid_argument naming the offending generator.
  void require_homogeneous() const;

  /// Degree of generator i under the grading; requires homogeneity.
  long generator_degree(std::size_t i) const;

 private:
  std::vector<std::string> vars_;
  std::vector<int> degrees_;
  std::vector<MultiPoly> gens_;
};

/// All monomials of weighted degree `d`, largest-first in lex order.
std::vector<Exponents> monomials_of_degree(const std::vector<int>& degrees, int d);

/// dim_Q of the degree-d piece of R/I, by row reduction of the span of
/// {m*g : deg(m*g) = d}.
std::size_t hilbert_dim(const GradedIdeal& ideal, int degree);

std::vector<std::size_t> hilbert_function(const GradedIdeal& ideal, int max_degree);

/// Unique representative of a homogeneous `p` modulo the ideal, supported on
/// the standard monomials of its degree (pivots are taken largest-first in
/// lex order, so the smallest monomials survive).
MultiPoly normal_form(const GradedIdeal& ideal, const MultiPoly& p);

}  // namespace qcurves

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qcurves/linalg.hpp"
#include "qcurves/poly.hpp"

namespace qcurves {

/// Ordered basis whose vectors carry integer torus weights. Labels are unique.
class WeightedBasis {
 public:
  WeightedBasis() = default;
  WeightedBasis(std::vector<std::string> labels, std::vector<int> weights);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t size() const { return labels_.size(); }

  bool contains(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;
  int weight_of(const std::string& label) const { return weights_[index_of(label)]; }

  friend bool operator==(const WeightedBasis&, const WeightedBasis&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> weights_;
};

/// Multiset of weights kept in non-decreasing order.
class WeightMultiset {
 public:
  WeightMultiset() = default;
  WeightMultiset(std::vector<int> values);  // NOLINT(google-explicit-constructor)
  WeightMultiset(std::initializer_list<int> values) : WeightMultiset(std::vector<int>(values)) {}
  static WeightMultiset of(const WeightedBasis& basis) { return WeightMultiset(basis.weights()); }

  /// Parses "a,b,c" (order irrelevant, whitespace tolerated).
  static WeightMultiset parse(const std::string& text);

  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::size_t count(int w) const;
  std::size_t count_negative() const;
  std::size_t count_positive() const;

  bool contains(const WeightMultiset& sub) const;

  /// Multiset difference; throws ConsistencyError unless `sub` embeds in *this.
  WeightMultiset minus(const WeightMultiset& sub) const;
  WeightMultiset plus(const WeightMultiset& other) const;
  WeightMultiset shifted(int delta) const;
  WeightMultiset without_one(int w) const { return minus(WeightMultiset{w}); }

  /// Comma-separated, non-decreasing: "-8,-6,-4".
  std::string to_string() const;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  std::vector<int> values_;
};

enum class Sl2Generator { e, f, h };

const char* to_string(Sl2Generator g);

/// Operator on a weighted basis; column j is the image of basis vector j.
struct LinearAction {
  WeightedBasis basis;
  Matrix matrix;
};

/// Label for the index k of Sym^d: "3" -> "3", -1 -> "m1".
std::string weight_index_label(int k);

/// v_d, v_{d-2}, ..., v_{-d} with weights d, d-2, ..., -d.
WeightedBasis symd_basis(int d);

/// e v_{d-2i} = i v_{d-2i+2},  f v_{d-2i} = (d-i) v_{d-2i-2},  h v_{d-2i} = (d-2i) v_{d-2i}.
LinearAction sl2_operator(Sl2Generator op, int d);

// Induced bases. Labels are composed so that they stay unique.
WeightedBasis dual(const WeightedBasis& a);
WeightedBasis tensor(const WeightedBasis& a, const WeightedBasis& b);
WeightedBasis wedge2(const WeightedBasis& a);
WeightedBasis sym2(const WeightedBasis& a);
WeightedBasis hom(const WeightedBasis& a, const WeightedBasis& b);
/// Removes the listed labels (each must exist).
WeightedBasis quotient(const WeightedBasis& a, const std::vector<std::string>& labels);

// ---- the Pluecker space of V_3 ----------------------------------------------

using PlueckerIndex = std::pair<int, int>;

/// The six index pairs (3,1), (3,-1), (3,-3), (1,-1), (1,-3), (-1,-3).
const std::vector<PlueckerIndex>& plucker_indices();

/// Variable names "v31", "v3m1", "v3m3", "v1m1", "v1m3", "vm1m3" in the fixed order.
const std::vector<std::string>& plucker_variables();

std::string plucker_label(int a, int b);

/// Pluecker labels with weights a+b: (4,2,0,0,-2,-4).
WeightedBasis plucker_basis();

/// Image of v_{i,j} under the Leibniz rule, as a linear form in the Pluecker
/// variables. v_{j,i} is accepted and read as -v_{i,j}.
MultiPoly wedge2_operator_action(Sl2Generator op, int i, int j);

/// Extends wedge2_operator_action linearly to a linear form.
MultiPoly wedge2_operator_action(Sl2Generator op, const MultiPoly& linear_form);

/// The unique sl2-stable hyperplane: kernel of e on the weight-0 linear forms,
/// checked against f, normalized to leading coefficient 1.
MultiPoly invariant_hyperplane();

}  // namespace qcurves

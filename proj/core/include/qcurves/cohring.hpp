#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcurves/graded.hpp"
#include "qcurves/poly.hpp"
#include "qcurves/tangent.hpp"

namespace qcurves {

/// Variables c1, c2 with Chow degrees 1, 2.
const std::vector<std::string>& chern_variables();
const std::vector<int>& chern_degrees();

/// c1^3 - 2*c1*c2 and c1^4 - 3*c1^2*c2 + c2^2: the Chow ring of Gr(2,4).
GradedIdeal gr24_relations();

/// Rank of the bundle whose projectivization is the cubic moduli space:
/// h0_twisted - 2 * h0_hyperplane. Throws std::invalid_argument when the
/// inputs are negative or the rank is not positive.
inline constexpr long kHyperplaneSections = 5;  // h^0(O_Q(1))
inline constexpr long kTwistedSections = 16;    // h^0(U_Q(2))

long bundle_rank_arithmetic(long h0_hyperplane = kHyperplaneSections, long h0_twisted = kTwistedSections);

/// A polynomial in c1, c2 with every term of Chow degree <= max_degree.
class ChernPolynomial {
 public:
  ChernPolynomial(MultiPoly p, int max_degree);
  static ChernPolynomial one(int max_degree);

  const MultiPoly& poly() const { return p_; }
  int max_degree() const { return max_degree_; }
  /// Homogeneous piece of the given Chow degree.
  MultiPoly piece(int degree) const;

  ChernPolynomial operator*(const ChernPolynomial& rhs) const;
  /// Truncated inverse; requires constant term 1.
  ChernPolynomial inverse() const;
  /// Truncated power; negative exponents go through inverse().
  ChernPolynomial pow(int n) const;

  friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) {
    return a.max_degree_ == b.max_degree_ && a.p_ == b.p_;
  }

 private:
  MultiPoly p_;
  int max_degree_;
};

inline constexpr int kBundleRank = 6;

struct GrothendieckData {
  /// c_0(G) .. c_6(G) from (1 + c1 + c2)^(-5), before and after reduction.
  std::array<MultiPoly, kBundleRank + 1> raw_classes;
  std::array<MultiPoly, kBundleRank + 1> reduced_classes;
  /// sum of c_i(G) h^(6-i) over (c1, c2, h).
  MultiPoly relation;
};

/// Computes the Chern classes of the rank-6 bundle and the relation. Throws
/// ConsistencyError if a class of degree > 4 survives reduction.
GrothendieckData grothendieck_data();

/// h^6 - 5*c1*h^5 + (15*c1^2 - 5*c2)*h^4 - 40*c1*c2*h^3 + 50*c2^2*h^2.
MultiPoly expected_grothendieck_relation();

/// The computed relation; throws ConsistencyError (showing both sides) if it
/// differs from expected_grothendieck_relation().
MultiPoly grothendieck_relation();

/// Q[c1, c2, h] (Chow degrees 1, 2, 1) modulo the Gr(2,4) relations and the
/// Grothendieck relation. Generators are checked homogeneous of degrees 3, 4, 6.
GradedIdeal s3_ring_presentation();

/// Dimensions of the graded pieces in Chow degrees 0..max_degree.
std::vector<std::size_t> hilbert_series_s3(int max_degree = 9);

/// sum dim_k t^(2k) over the Hilbert series.
PoincarePolynomial poincare_s3_from_bundle();

}  // namespace qcurves

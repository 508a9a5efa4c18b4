#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcurves/poly.hpp"
#include "qcurves/rep.hpp"

namespace qcurves {

inline constexpr std::size_t kPlueckerDim = 6;

/// Coordinates in the fixed order (v31, v3m1, v3m3, v1m1, v1m3, vm1m3).
using PlueckerVector = std::array<Rational, kPlueckerDim>;

/// A point of P(W); equality is up to nonzero scaling.
class PlueckerPoint {
 public:
  explicit PlueckerPoint(const PlueckerVector& coords);

  /// Parses "[a:b:c:d:e:f]" with rational entries.
  static PlueckerPoint parse(const std::string& text);

  const PlueckerVector& coordinates() const { return coords_; }

  /// Representative whose first nonzero coordinate is 1.
  PlueckerVector normalized() const;

  /// "[a:b:c:d:e:f]" using the primitive integer representative with
  /// positive first nonzero entry, e.g. "[0:0:3:1:0:0]".
  std::string to_string() const;

  /// Torus weight when the support lies in a single weight space.
  std::optional<int> weight() const;

  friend bool operator==(const PlueckerPoint& a, const PlueckerPoint& b) {
    return a.normalized() == b.normalized();
  }

 private:
  PlueckerVector coords_;
};

/// Six coordinate polynomials over domain variables. The first
/// `homogeneous_count` variables are the homogeneous coordinates of the
/// source (e.g. u, v); any further variables are formal parameters.
class ParametrizedCurve {
 public:
  ParametrizedCurve(std::vector<std::string> variables, std::size_t homogeneous_count,
                    std::array<MultiPoly, kPlueckerDim> coords);

  /// Coordinates given as text over `variables`.
  static ParametrizedCurve parse(std::vector<std::string> variables, std::size_t homogeneous_count,
                                 const std::array<std::string, kPlueckerDim>& coords);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t homogeneous_count() const { return homogeneous_count_; }
  const std::array<MultiPoly, kPlueckerDim>& coordinates() const { return coords_; }
  long degree() const { return degree_; }

  /// Pluecker variable -> coordinate polynomial.
  std::map<std::string, MultiPoly> assignment() const;

  /// Pulls a form on P(W) back to the domain.
  MultiPoly pull_back(const MultiPoly& form) const;

 private:
  std::vector<std::string> vars_;
  std::size_t homogeneous_count_;
  std::array<MultiPoly, kPlueckerDim> coords_;
  long degree_ = 0;
};

/// v31*vm1m3 - v3m1*v1m3 + v3m3*v1m1.
MultiPoly klein_form();

/// v3m3 - 3*v1m1 (derived from the sl2 action).
MultiPoly hyperplane_form();

MultiPoly plucker_form(const std::string& text);

Rational evaluate(const MultiPoly& form, const PlueckerPoint& p);

bool on_grassmannian(const PlueckerPoint& p);
bool on_hyperplane(const PlueckerPoint& p);
bool on_quadric(const PlueckerPoint& p);
/// True iff the Klein and hyperplane forms vanish identically on the curve.
bool on_quadric(const ParametrizedCurve& c);

enum class Ambient { quadric, hyperplane };

/// Weight basis of W1 = ker(hyperplane form) together with the vectors.
struct WeightedFrame {
  WeightedBasis basis;
  std::vector<PlueckerVector> vectors;
};

/// One vector per weight space of W1: labels v31, v3m1, q0, v1m3, vm1m3 with
/// weights (4, 2, 0, -2, -4). Throws if a weight space of W1 is not a line.
WeightedFrame hyperplane_weight_frame();

/// Torus-fixed points of Q or of H, by decreasing weight.
std::vector<PlueckerPoint> fixed_points(Ambient space);

PlueckerVector unit_vector(std::size_t i);

}  // namespace qcurves

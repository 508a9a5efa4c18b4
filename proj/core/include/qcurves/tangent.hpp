#pragma once

#include <string>
#include <vector>

#include "qcurves/cubics.hpp"
#include "qcurves/fixedloci.hpp"
#include "qcurves/rep.hpp"

namespace qcurves {

/// Tangent weights at a fixed curve: moduli = ambient - sections, as multisets.
struct TangentRow {
  std::string tag;
  /// Ambient weights as the blocks they come from (one block for lines; the
  /// Hom block then the shifted Sym^2 block for conics). Each block is sorted.
  std::vector<WeightMultiset> ambient_blocks;
  WeightMultiset ambient;
  WeightMultiset sections;
  WeightMultiset moduli;
  std::size_t delta = 0;  // negative moduli weights

  /// Blocks joined in order, e.g. "-8,-6,-4,2,4 | -4,-2,2,4".
  std::string ambient_text() const;
};

/// ambient = Hom(L, W1/L), sections = Sym^2(L^*).
TangentRow line_tangent_row(const FixedLine& line);
/// ambient = Hom(U, W1/U) + (Sym^2(U^*) - q) shifted by -q, sections = Sym^2(U^*) - q,
/// where U is the conic's plane and q its equation weight.
TangentRow conic_tangent_row(const FixedConic& conic);

std::vector<TangentRow> line_rows();
std::vector<TangentRow> conic_rows();

// ---- Bialynicki-Birula -----------------------------------------------------------------

enum class ComponentKind { isolated, projective_line };

const char* to_string(ComponentKind k);

struct BBComponent {
  std::string name;
  ComponentKind kind = ComponentKind::isolated;
  std::size_t delta = 0;
};

/// Polynomial in t with non-negative integer coefficients; index = exponent.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<long> coefficients);

  const std::vector<long>& coefficients() const { return coeffs_; }
  long coefficient(std::size_t exponent) const { return exponent < coeffs_.size() ? coeffs_[exponent] : 0; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_palindromic() const;
  long value_at_one() const;

  PoincarePolynomial& operator+=(const PoincarePolynomial& rhs);

  /// "1+t^2+2t^4", "0" for zero.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static PoincarePolynomial parse(const std::string& text);

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

 private:
  void trim();
  std::vector<long> coeffs_;
};

/// Sum of t^(2 delta), or (1 + t^2) t^(2 delta) for a projective line.
PoincarePolynomial bb_poincare(const std::vector<BBComponent>& components);
long euler_characteristic(const std::vector<BBComponent>& components);

std::vector<BBComponent> components_of(const std::vector<TangentRow>& rows);
/// Isolated points and P^1 families of the degenerate-cubic census. Tangent weights
/// there are not computed, so every delta is left at 0: use for Euler counts only.
std::vector<BBComponent> census_components(const CubicCensus& census);

// ---- zero weights along the smooth fixed cubic ---------------------------------------------

struct ZeroWeightChain {
  int w0_T_P4 = 0;
  int w0_N = 0;
  int w0_T_Q = 0;
  int w0_T_P1 = 0;
  int w0_moduli = 0;
  /// f is equivariant for domain weights (1,-1) and codomain weights shifted by -1.
  bool equivariant = false;
};

/// Zero-weight count of H^0 along f = [u^3 : u^2 v : 3uv^2 : uv^2 : 3v^3 : 0], from the
/// pulled-back Euler sequence and the normal sequence of Q in P^4.
ZeroWeightChain zero_weight_chain();

}  // namespace qcurves

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcurves/fixedloci.hpp"

namespace qcurves {

/// Number of torus-fixed points on the projectivized extension space that
/// builds a non-reduced cubic on a fixed double line or line pair. The
/// extension space is two-dimensional with a non-trivial torus action, so its
/// projectivization is a P^1 with two fixed points. Taken as given: computing
/// these Ext groups is outside this library.
inline constexpr int kNonReducedStructures = 2;

struct CubicCensus {
  int reduced_trees = 0;        // chains of three fixed lines
  int conic_plus_line = 0;      // smooth fixed conic + fixed line through a fixed point on it
  int reduced_total = 0;
  int pair_supports = 0;        // (line-pair conic, doubled line) choices
  int pair_supported = 0;       // pair_supports * kNonReducedStructures
  int triple_supports = 0;      // fixed lines carrying a fixed double line
  int triple_lines = 0;         // triple_supports * kNonReducedStructures
  int degenerate_total = 0;
  int families = 0;             // P^1 components of smooth fixed cubics
  int family_endpoints = 0;     // flat limits closing up the families (two each)
  int isolated = 0;

  int euler_characteristic() const { return isolated + 2 * families; }
  /// Labelled assumption reconciling the degenerate count with the isolated one.
  static const char* reconciliation();
};

/// Counts torus-invariant degenerate cubics from the incidence graph.
CubicCensus count_invariant_cubics(const IncidenceGraph& graph, const std::vector<FixedConic>& conics);
CubicCensus count_invariant_cubics();

// ---- the smooth family C_a ----------------------------------------------------------

/// (alpha, beta, lambda) with x(t^alpha u, t^beta v) = t^lambda (t . x)(u, v).
struct TorusCertificate {
  int alpha = 0;
  int beta = 0;
  int lambda = 0;
  friend bool operator==(const TorusCertificate&, const TorusCertificate&) = default;
};

/// [u^3 : a u^2 v : 3 u v^2 : u v^2 : 3 a^-1 v^3 : 0] over (u, v, a).
ParametrizedCurve twisted_cubic_family();
/// The member at a fixed nonzero a, over (u, v).
ParametrizedCurve twisted_cubic_member(const Rational& a);

/// Integer certificate with the given beta, if one exists. Uses the Pluecker
/// coordinate weights; every term of every coordinate gives one equation.
std::optional<TorusCertificate> torus_certificate(const ParametrizedCurve& curve, int beta = 0);

struct TwistedCubicCheck {
  bool on_quadric = false;
  TorusCertificate certificate;
};

/// Formal parameter when `a` is empty. Throws std::invalid_argument for a = 0
/// and ConsistencyError when no integer certificate exists.
TwistedCubicCheck verify_twisted_cubic_family(const std::optional<Rational>& a = std::nullopt);

// ---- scrolls on the singular hyperplane sections ----------------------------------------

enum class ScrollCase { ii, iii };

const char* to_string(ScrollCase c);

/// Variables z0..z5 of the ambient space of S(1,3).
const std::vector<std::string>& scroll_variables();

/// The 2x2 minors of [[z0 z1 z2 z4], [z1 z2 z3 z5]].
std::vector<MultiPoly> catalecticant_minors();
/// z0*z2 - z1^2, the minor of [[z0 z1], [z1 z2]].
MultiPoly cone_minor();

struct ScrollAnalysis {
  ScrollCase which = ScrollCase::ii;
  std::array<int, 6> weights{};
  /// The Pluecker coordinate set to zero together with the hyperplane.
  std::string section_coordinate;
  /// Weights of the remaining coordinates of the section's P^3.
  WeightMultiset section_weights;
  std::vector<MultiPoly> minors;
  bool minors_homogeneous = false;
  /// Projection to (z0, z1, z2, z4) carries the section weights.
  bool projection_equivariant = false;
  /// Groups of coordinates (indices into z0..z5) sharing a weight.
  std::vector<std::vector<std::size_t>> repeated_weight_groups;

  std::size_t family_count() const { return repeated_weight_groups.size(); }
};

ScrollAnalysis scroll_fixed_families(ScrollCase which);

/// (t0^3 u0, t0^2 t1 u0, t0 t1^2 u0, t1^3 u0, t0 u1, t1 u1) over (t0, t1, u0, u1).
std::array<MultiPoly, 6> scroll_parametrization();

/// All catalecticant minors and the cone minor vanish on `param`.
bool catalecticant_check(const std::array<MultiPoly, 6>& param);
bool catalecticant_check();

/// The map z_i -> v_{a,b} with v_{a,b} -> v_{-b,-a} preserves Q; it exchanges
/// the singular sections so the count of families doubles.
bool weight_reversal_preserves_quadric();

// ---- the smooth hyperplane section ---------------------------------------------------------

struct SmoothSectionAnalysis {
  /// Weights of [s:t] and [v:w] making (sv, sw, tv, tw) -> (v31, v3m1, v1m3, vm1m3) equivariant,
  /// normalized so each pair sums to zero.
  std::array<int, 2> first_factor{};
  std::array<int, 2> second_factor{};
  WeightMultiset bidegree_12;  // H^0(O(1) x O(2)) = C_{s,t} x Sym^2 C_{v,w}
  WeightMultiset bidegree_21;
  bool weights_distinct = false;
  /// Every fixed member is a coordinate monomial, hence a union of rulings.
  bool fixed_members_reducible = false;
};

SmoothSectionAnalysis smooth_section_cubics();

}  // namespace qcurves

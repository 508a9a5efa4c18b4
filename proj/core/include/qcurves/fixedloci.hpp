#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qcurves/poly.hpp"
#include "qcurves/quadric.hpp"
#include "qcurves/rep.hpp"

namespace qcurves {

/// A torus-fixed line of Q: the span of two coordinate fixed points.
struct FixedLine {
  char tag = '?';
  std::array<std::string, 2> labels;
  std::array<int, 2> weights{};
  std::array<PlueckerPoint, 2> endpoints;

  WeightedBasis span() const { return WeightedBasis({labels[0], labels[1]}, {weights[0], weights[1]}); }
  /// s*endpoint0 + t*endpoint1 over (s, t).
  ParametrizedCurve parametrization() const;
  /// "[s:t:0:0:0:0]"-style display.
  std::string display() const;
  std::string id() const { return std::string(1, tag); }
};

/// Enumerates coordinate lines through pairs of fixed points of Q and keeps
/// those lying on Q; tags a..d follow pair order. Throws unless exactly four.
std::vector<FixedLine> fixed_lines();

enum class ConicKind { double_line, line_pair, smooth };

const char* to_string(ConicKind kind);

struct FixedConic {
  std::string tag;
  std::vector<MultiPoly> generators;
  /// U_C: weight basis of the plane spanned by the conic.
  WeightedBasis plane;
  std::vector<PlueckerVector> plane_vectors;
  /// The quadric generator restricted to the plane, over x0, x1, x2 (dual to U_C).
  MultiPoly plane_equation;
  /// Torus weight of plane_equation as an element of Sym^2(U_C^*).
  int equation_weight = 0;
  ConicKind kind = ConicKind::smooth;

  /// "<g1, g2, g3, g4>" in canonical text.
  std::string ideal_text() const;
  bool contains(const PlueckerPoint& p) const;
  bool contains(const ParametrizedCurve& c) const;
};

/// The ten fixed-conic ideals as listed (tag, generators in canonical text).
const std::vector<std::pair<std::string, std::vector<std::string>>>& conic_ideal_table();

/// Verifies one ideal (weight-homogeneous generators, three linear forms and
/// one quadric, Q's equations in the ideal) and derives U_C, the equation
/// weight and the kind. Throws ConsistencyError naming the tag.
FixedConic analyze_conic(const std::string& tag, const std::vector<MultiPoly>& generators);

/// All ten conics, each checked against the torus-fixed planes of H (spans of
/// three of the five fixed points of H).
std::vector<FixedConic> fixed_conics();

/// Fixed planes of H as three spanning fixed points each.
std::vector<std::array<PlueckerPoint, 3>> fixed_planes();

/// Restricts a form on P(W) to the span of `vectors`, over x0, x1, ...
MultiPoly restrict_to_span(const MultiPoly& form, const std::vector<PlueckerVector>& vectors);

// ---- incidence -------------------------------------------------------------------

enum class LocusKind { point, line, conic };
enum class Relation { contains, meets };

const char* to_string(LocusKind kind);
const char* to_string(Relation r);

struct IncidenceNode {
  std::string id;
  LocusKind kind;
};

/// Undirected edge. For `contains`, `a` is the larger locus. The witness lies
/// on both loci.
struct IncidenceEdge {
  std::string a;
  std::string b;
  Relation relation;
  PlueckerPoint witness;
};

class IncidenceGraph {
 public:
  IncidenceGraph(std::vector<IncidenceNode> nodes, std::vector<IncidenceEdge> edges);

  const std::vector<IncidenceNode>& nodes() const { return nodes_; }
  const std::vector<IncidenceEdge>& edges() const { return edges_; }

  const IncidenceEdge* edge(const std::string& x, const std::string& y) const;
  bool adjacent(const std::string& x, const std::string& y) const { return edge(x, y) != nullptr; }
  LocusKind kind(const std::string& id) const;
  /// Neighbours of `id` of the given kind, in node order.
  std::vector<std::string> neighbors(const std::string& id, LocusKind kind) const;

 private:
  std::vector<IncidenceNode> nodes_;
  std::vector<IncidenceEdge> edges_;
};

/// Point ids for the fixed points of Q: "p31", "p3m1", "p1m3", "pm1m3".
std::string point_id(const PlueckerPoint& p);

/// Built from coordinates: line/line by span intersection, point/locus and
/// line/conic by evaluating equations.
IncidenceGraph incidence_graph(const std::vector<PlueckerPoint>& points, const std::vector<FixedLine>& lines,
                               const std::vector<FixedConic>& conics);
IncidenceGraph incidence_graph();

}  // namespace qcurves

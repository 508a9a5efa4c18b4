#include <algorithm>
#include <stdexcept>

#include "qcurves/errors.hpp"
#include "qcurves/fixedloci.hpp"
#include "qcurves/linalg.hpp"

namespace qcurves {

const char* to_string(LocusKind kind) {
  switch (kind) {
    case LocusKind::point: return "point";
    case LocusKind::line: return "line";
    case LocusKind::conic: return "conic";
  }
  return "?";
}

const char* to_string(Relation r) { return r == Relation::contains ? "contains" : "meets"; }

IncidenceGraph::IncidenceGraph(std::vector<IncidenceNode> nodes, std::vector<IncidenceEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    kind(e.a);
    kind(e.b);
  }
}

const IncidenceEdge* IncidenceGraph::edge(const std::string& x, const std::string& y) const {
  for (const auto& e : edges_) {
    if ((e.a == x && e.b == y) || (e.a == y && e.b == x)) return &e;
  }
  return nullptr;
}

LocusKind IncidenceGraph::kind(const std::string& id) const {
  for (const auto& n : nodes_) {
    if (n.id == id) return n.kind;
  }
  throw std::invalid_argument("IncidenceGraph: unknown node " + id);
}

std::vector<std::string> IncidenceGraph::neighbors(const std::string& id, LocusKind k) const {
  std::vector<std::string> out;
  for (const auto& n : nodes_) {
    if (n.kind == k && n.id != id && adjacent(id, n.id)) out.push_back(n.id);
  }
  return out;
}

std::string point_id(const PlueckerPoint& p) {
  const auto& c = p.coordinates();
  const auto nz = std::count_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
  const auto w = p.weight();
  if (nz != 1 || !w) return "q" + (w ? weight_index_label(*w) : std::string("?"));
  const auto i = static_cast<std::size_t>(
      std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); }) - c.begin());
  return "p" + plucker_variables()[i].substr(1);
}

namespace {

bool point_on_line(const PlueckerPoint& x, const FixedLine& line) {
  std::vector<Vector> rows;
  for (const auto& p : line.endpoints) rows.emplace_back(p.coordinates().begin(), p.coordinates().end());
  rows.emplace_back(x.coordinates().begin(), x.coordinates().end());
  return rank(Matrix::from_rows(rows, kPlueckerDim)) == 2;
}

// Common point of two lines, if they meet in exactly one point.
std::optional<PlueckerPoint> line_intersection(const FixedLine& l1, const FixedLine& l2) {
  Matrix m(kPlueckerDim, 4);
  const std::array<const PlueckerPoint*, 4> spans = {&l1.endpoints[0], &l1.endpoints[1], &l2.endpoints[0],
                                                     &l2.endpoints[1]};
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t r = 0; r < kPlueckerDim; ++r) {
      m(r, c) = c < 2 ? spans[c]->coordinates()[r] : -spans[c]->coordinates()[r];
    }
  }
  const auto kernel = nullspace(m);
  if (kernel.size() != 1) return std::nullopt;
  PlueckerVector x;
  for (std::size_t r = 0; r < kPlueckerDim; ++r) {
    x[r] = kernel[0][0] * l1.endpoints[0].coordinates()[r] + kernel[0][1] * l1.endpoints[1].coordinates()[r];
  }
  return PlueckerPoint(x);
}

PlueckerPoint generic_point(const FixedLine& line) {
  PlueckerVector x;
  for (std::size_t r = 0; r < kPlueckerDim; ++r) {
    x[r] = line.endpoints[0].coordinates()[r] + line.endpoints[1].coordinates()[r];
  }
  return PlueckerPoint(x);
}

}  // namespace

IncidenceGraph incidence_graph(const std::vector<PlueckerPoint>& points, const std::vector<FixedLine>& lines,
                               const std::vector<FixedConic>& conics) {
  std::vector<IncidenceNode> nodes;
  std::vector<IncidenceEdge> edges;
  for (const auto& p : points) nodes.push_back({point_id(p), LocusKind::point});
  for (const auto& l : lines) nodes.push_back({l.id(), LocusKind::line});
  for (const auto& c : conics) nodes.push_back({c.tag, LocusKind::conic});

  for (const auto& l : lines) {
    for (const auto& p : points) {
      if (point_on_line(p, l)) edges.push_back({l.id(), point_id(p), Relation::contains, p});
    }
  }
  for (const auto& c : conics) {
    for (const auto& p : points) {
      if (c.contains(p)) edges.push_back({c.tag, point_id(p), Relation::contains, p});
    }
    for (const auto& l : lines) {
      if (c.contains(l.parametrization())) edges.push_back({c.tag, l.id(), Relation::contains, generic_point(l)});
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (auto x = line_intersection(lines[i], lines[j])) {
        edges.push_back({lines[i].id(), lines[j].id(), Relation::meets, *x});
      }
    }
  }
  return IncidenceGraph(std::move(nodes), std::move(edges));
}

IncidenceGraph incidence_graph() {
  return incidence_graph(fixed_points(Ambient::quadric), fixed_lines(), fixed_conics());
}

}  // namespace qcurves

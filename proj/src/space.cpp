#include "ap3/space.hpp"

#include <set>
#include <stdexcept>

namespace ap3 {

const char* space_kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Line: return "line";
    case SpaceKind::Euclidean: return "euclidean";
    case SpaceKind::Circle: return "circle";
    case SpaceKind::EquatorPoles: return "equator-poles";
    case SpaceKind::RegularTree: return "regular-tree";
    case SpaceKind::Lattice: return "lattice";
    case SpaceKind::FiniteGraph: return "finite-graph";
    case SpaceKind::RadialPlane: return "radial-plane";
    case SpaceKind::CompleteBipartite: return "complete-bipartite";
  }
  return "?";
}

namespace {

Space make(SpaceKind kind) {
  Space s;
  s.kind = kind;
  return s;
}

}  // namespace

Space Space::line() { return make(SpaceKind::Line); }

Space Space::euclidean(int dim) {
  if (dim < 1) throw std::invalid_argument("euclidean dimension must be >= 1");
  Space s = make(SpaceKind::Euclidean);
  s.dim = dim;
  return s;
}

Space Space::circle() { return make(SpaceKind::Circle); }

Space Space::equator_poles() { return make(SpaceKind::EquatorPoles); }

Space Space::regular_tree(int degree) {
  if (degree < 2) throw std::invalid_argument("regular tree degree must be >= 2");
  Space s = make(SpaceKind::RegularTree);
  s.degree = degree;
  return s;
}

Space Space::lattice(int dim) {
  if (dim < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  Space s = make(SpaceKind::Lattice);
  s.dim = dim;
  return s;
}

Space Space::finite_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
  Space s = make(SpaceKind::FiniteGraph);
  s.vertex_count = vertex_count;
  // Validates ids, self-loops and connectivity; throws otherwise.
  s.graph_metric = std::make_shared<const DistanceMatrix>(graph_apsp(edges, vertex_count));
  s.edges = std::move(edges);
  return s;
}

Space Space::radial_plane() { return make(SpaceKind::RadialPlane); }

Space Space::complete_bipartite() { return make(SpaceKind::CompleteBipartite); }

Point line_point(Rational x) { return LinePoint{std::move(x)}; }

Point euclidean_point(std::vector<Rational> coords) { return EuclideanPoint{std::move(coords)}; }

Point circle_point(Rational turn) { return CirclePoint{turn.mod1()}; }

Point equator_point(Rational turn) { return EquatorPolesPoint{turn.mod1()}; }

Point pole_point(Pole pole) { return EquatorPolesPoint{pole}; }

Point tree_point(std::vector<int> path) { return TreePoint{std::move(path)}; }

Point lattice_point(std::vector<long long> coords) { return LatticePoint{std::move(coords)}; }

Point graph_point(int vertex) { return GraphPoint{vertex}; }

Point radial_point(Rational radius, Rational turn) {
  if (radius.sign() < 0) throw std::invalid_argument("radial point needs radius >= 0");
  if (radius.is_zero()) return RadialPoint{Rational(0), Rational(0)};
  return RadialPoint{std::move(radius), turn.mod1()};
}

Point bipartite_point(Side side, long long index) {
  if (index < 0) throw std::invalid_argument("bipartite point index must be >= 0");
  return BipartitePoint{side, index};
}

namespace {

[[noreturn]] void kind_mismatch(const Space& space) {
  throw std::invalid_argument(std::string("point kind does not match space kind '") +
                              space_kind_name(space.kind) + "'");
}

}  // namespace

void validate_point(const Space& space, const Point& p) {
  switch (space.kind) {
    case SpaceKind::Line:
      if (!std::holds_alternative<LinePoint>(p)) kind_mismatch(space);
      return;
    case SpaceKind::Euclidean: {
      const auto* q = std::get_if<EuclideanPoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      if (static_cast<int>(q->coords.size()) != space.dim) {
        throw std::invalid_argument("euclidean point has " + std::to_string(q->coords.size()) +
                                    " coordinates, space has dimension " +
                                    std::to_string(space.dim));
      }
      return;
    }
    case SpaceKind::Circle: {
      const auto* q = std::get_if<CirclePoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      if (q->turn.sign() < 0 || q->turn >= Rational(1)) {
        throw std::invalid_argument("circle turn must lie in [0,1)");
      }
      return;
    }
    case SpaceKind::EquatorPoles: {
      const auto* q = std::get_if<EquatorPolesPoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      if (!q->is_pole() && (q->turn().sign() < 0 || q->turn() >= Rational(1))) {
        throw std::invalid_argument("equator turn must lie in [0,1)");
      }
      return;
    }
    case SpaceKind::RegularTree: {
      const auto* q = std::get_if<TreePoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      for (std::size_t depth = 0; depth < q->path.size(); ++depth) {
        const int fanout = depth == 0 ? space.degree : space.degree - 1;
        const int child = q->path[depth];
        if (child < 0 || child >= fanout) {
          throw std::invalid_argument("tree child index " + std::to_string(child) +
                                      " out of range 0.." + std::to_string(fanout - 1) +
                                      " at depth " + std::to_string(depth));
        }
      }
      return;
    }
    case SpaceKind::Lattice: {
      const auto* q = std::get_if<LatticePoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      if (static_cast<int>(q->coords.size()) != space.dim) {
        throw std::invalid_argument("lattice point has " + std::to_string(q->coords.size()) +
                                    " coordinates, space has dimension " +
                                    std::to_string(space.dim));
      }
      return;
    }
    case SpaceKind::FiniteGraph: {
      const auto* q = std::get_if<GraphPoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      if (q->vertex < 0 || q->vertex >= space.vertex_count) {
        throw std::invalid_argument("graph vertex id " + std::to_string(q->vertex) +
                                    " outside 0.." + std::to_string(space.vertex_count - 1));
      }
      return;
    }
    case SpaceKind::RadialPlane: {
      const auto* q = std::get_if<RadialPoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      if (q->radius.sign() < 0) throw std::invalid_argument("radial radius must be >= 0");
      if (q->radius.is_zero() && !q->turn.is_zero()) {
        throw std::invalid_argument("radius-0 radial point must carry turn 0");
      }
      if (q->turn.sign() < 0 || q->turn >= Rational(1)) {
        throw std::invalid_argument("radial turn must lie in [0,1)");
      }
      return;
    }
    case SpaceKind::CompleteBipartite: {
      const auto* q = std::get_if<BipartitePoint>(&p);
      if (q == nullptr) kind_mismatch(space);
      if (q->index < 0) throw std::invalid_argument("bipartite index must be >= 0");
      return;
    }
  }
  kind_mismatch(space);
}

PointSet::PointSet(Space space, std::vector<Point> points)
    : space_(std::move(space)), points_(std::move(points)) {
  std::set<Point> seen;
  for (const Point& p : points_) {
    validate_point(space_, p);
    if (!seen.insert(p).second) {
      throw std::invalid_argument("point set contains a duplicate point");
    }
  }
}

}  // namespace ap3

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ap3/graph.hpp"
#include "ap3/rational.hpp"

namespace ap3 {

// The nine supported metric-space kinds. Circle and equator angles are
// measured in turns (fractions of a full revolution) so that every distance
// is an exact rational; the 3-AP relation only compares distances against
// each other and against a half, so the unit cancels.
//
// Euclidean is special: its distance function returns the SQUARED Euclidean
// distance (the true distance is irrational in general). Squared distance is
// not a metric; the 3-AP predicate compensates by testing the squared form
// of the relation (equal legs and a 4x whole-to-leg ratio).
enum class SpaceKind {
  Line,
  Euclidean,
  Circle,
  EquatorPoles,
  RegularTree,
  Lattice,
  FiniteGraph,
  RadialPlane,
  CompleteBipartite,
};

const char* space_kind_name(SpaceKind kind);

struct Space {
  SpaceKind kind = SpaceKind::Line;
  int dim = 0;     // Euclidean / Lattice dimension
  int degree = 0;  // RegularTree degree r >= 2
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  // APSP table, computed once at construction for FiniteGraph.
  std::shared_ptr<const DistanceMatrix> graph_metric;

  static Space line();
  static Space euclidean(int dim);
  static Space circle();
  static Space equator_poles();
  static Space regular_tree(int degree);
  static Space lattice(int dim);
  static Space finite_graph(int vertex_count, std::vector<std::pair<int, int>> edges);
  static Space radial_plane();
  static Space complete_bipartite();
};

// --- per-kind point payloads -------------------------------------------------

struct LinePoint {
  Rational x;
  bool operator==(const LinePoint& o) const { return x == o.x; }
  bool operator<(const LinePoint& o) const { return x < o.x; }
};

struct EuclideanPoint {
  std::vector<Rational> coords;
  bool operator==(const EuclideanPoint& o) const { return coords == o.coords; }
  bool operator<(const EuclideanPoint& o) const { return coords < o.coords; }
};

struct CirclePoint {
  Rational turn;  // reduced into [0,1)
  bool operator==(const CirclePoint& o) const { return turn == o.turn; }
  bool operator<(const CirclePoint& o) const { return turn < o.turn; }
};

enum class Pole : std::uint8_t { North = 0, South = 1 };

struct EquatorPolesPoint {
  // Either a pole or an equator position given as a circle turn.
  std::variant<Pole, Rational> where;
  bool is_pole() const { return where.index() == 0; }
  Pole pole() const { return std::get<Pole>(where); }
  const Rational& turn() const { return std::get<Rational>(where); }
  bool operator==(const EquatorPolesPoint& o) const { return where == o.where; }
  bool operator<(const EquatorPolesPoint& o) const { return where < o.where; }
};

struct TreePoint {
  // Path of child indices from the root. The root has children 0..r-1,
  // every deeper vertex has children 0..r-2.
  std::vector<int> path;
  bool operator==(const TreePoint& o) const { return path == o.path; }
  bool operator<(const TreePoint& o) const { return path < o.path; }
};

struct LatticePoint {
  std::vector<long long> coords;
  bool operator==(const LatticePoint& o) const { return coords == o.coords; }
  bool operator<(const LatticePoint& o) const { return coords < o.coords; }
};

struct GraphPoint {
  int vertex = 0;
  bool operator==(const GraphPoint& o) const { return vertex == o.vertex; }
  bool operator<(const GraphPoint& o) const { return vertex < o.vertex; }
};

struct RadialPoint {
  Rational radius;  // >= 0; radius 0 is canonicalized to turn 0
  Rational turn;    // reduced into [0,1)
  bool operator==(const RadialPoint& o) const { return radius == o.radius && turn == o.turn; }
  bool operator<(const RadialPoint& o) const {
    if (radius != o.radius) return radius < o.radius;
    return turn < o.turn;
  }
};

enum class Side : std::uint8_t { L = 0, R = 1 };

struct BipartitePoint {
  Side side = Side::L;
  long long index = 0;
  bool operator==(const BipartitePoint& o) const { return side == o.side && index == o.index; }
  bool operator<(const BipartitePoint& o) const {
    if (side != o.side) return side < o.side;
    return index < o.index;
  }
};

using Point = std::variant<LinePoint, EuclideanPoint, CirclePoint, EquatorPolesPoint, TreePoint,
                           LatticePoint, GraphPoint, RadialPoint, BipartitePoint>;

// Convenience constructors (canonicalizing where the representation needs it).
Point line_point(Rational x);
Point euclidean_point(std::vector<Rational> coords);
Point circle_point(Rational turn);              // turn reduced mod 1
Point equator_point(Rational turn);             // equator position, turn mod 1
Point pole_point(Pole pole);
Point tree_point(std::vector<int> path);
Point lattice_point(std::vector<long long> coords);
Point graph_point(int vertex);
Point radial_point(Rational radius, Rational turn);  // radius 0 forces turn 0
Point bipartite_point(Side side, long long index);

// Throws std::invalid_argument if the point's kind or parameters do not fit
// the space (wrong variant, wrong dimension, child index out of range, ...).
void validate_point(const Space& space, const Point& p);

// An ordered, duplicate-free list of points, all valid for one space.
// Immutable after construction; |A| is the list length (set semantics).
class PointSet {
 public:
  PointSet(Space space, std::vector<Point> points);

  const Space& space() const { return space_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }

 private:
  Space space_;
  std::vector<Point> points_;
};

}  // namespace ap3

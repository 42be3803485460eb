#include "ap3/metric.hpp"

#include <algorithm>
#include <stdexcept>

#include "ap3/circle.hpp"

namespace ap3 {

namespace {

Rational tree_distance(const TreePoint& p, const TreePoint& q) {
  const std::size_t common = std::min(p.path.size(), q.path.size());
  std::size_t lcp = 0;
  while (lcp < common && p.path[lcp] == q.path[lcp]) ++lcp;
  return Rational(static_cast<long long>(p.path.size() + q.path.size() - 2 * lcp));
}

Rational lattice_distance(const LatticePoint& p, const LatticePoint& q) {
  long long sum = 0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const long long diff = p.coords[i] - q.coords[i];
    sum += diff < 0 ? -diff : diff;
  }
  return Rational(sum);
}

Rational equator_distance(const EquatorPolesPoint& p, const EquatorPolesPoint& q) {
  // Units: turns of a great circle. Pole to pole is half a turn (antipodal),
  // pole to equator a quarter turn, equator to equator the equatorial arc.
  if (p.is_pole() && q.is_pole()) {
    return p.pole() == q.pole() ? Rational(0) : Rational(1, 2);
  }
  if (p.is_pole() || q.is_pole()) return Rational(1, 4);
  return circle_arc(p.turn(), q.turn());
}

Rational radial_distance(const RadialPoint& p, const RadialPoint& q) {
  // Along a common ray through the origin the metric is the line distance
  // |r1 - r2|; any other pair of points is joined through the origin, giving
  // r1 + r2. Opposite rays (turns half a turn apart) also give r1 + r2, which
  // the second branch already produces.
  if (p.turn == q.turn) return (p.radius - q.radius).abs();
  return p.radius + q.radius;
}

Rational bipartite_distance(const BipartitePoint& p, const BipartitePoint& q) {
  if (p == q) return Rational(0);
  return p.side == q.side ? Rational(2) : Rational(1);
}

}  // namespace

Rational distance(const Space& space, const Point& p, const Point& q) {
  validate_point(space, p);
  validate_point(space, q);
  switch (space.kind) {
    case SpaceKind::Line:
      return (std::get<LinePoint>(p).x - std::get<LinePoint>(q).x).abs();
    case SpaceKind::Euclidean: {
      const auto& a = std::get<EuclideanPoint>(p).coords;
      const auto& b = std::get<EuclideanPoint>(q).coords;
      Rational sum(0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational d = a[i] - b[i];
        sum += d * d;
      }
      return sum;  // squared
    }
    case SpaceKind::Circle:
      return circle_arc(std::get<CirclePoint>(p).turn, std::get<CirclePoint>(q).turn);
    case SpaceKind::EquatorPoles:
      return equator_distance(std::get<EquatorPolesPoint>(p), std::get<EquatorPolesPoint>(q));
    case SpaceKind::RegularTree:
      return tree_distance(std::get<TreePoint>(p), std::get<TreePoint>(q));
    case SpaceKind::Lattice:
      return lattice_distance(std::get<LatticePoint>(p), std::get<LatticePoint>(q));
    case SpaceKind::FiniteGraph:
      return Rational(space.graph_metric->at(std::get<GraphPoint>(p).vertex,
                                             std::get<GraphPoint>(q).vertex));
    case SpaceKind::RadialPlane:
      return radial_distance(std::get<RadialPoint>(p), std::get<RadialPoint>(q));
    case SpaceKind::CompleteBipartite:
      return bipartite_distance(std::get<BipartitePoint>(p), std::get<BipartitePoint>(q));
  }
  throw std::invalid_argument("unknown space kind");
}

int ap3_whole_to_leg_factor(SpaceKind kind) { return kind == SpaceKind::Euclidean ? 4 : 2; }

bool is_ap3(const Space& space, const Point& a, const Point& b, const Point& c) {
  const Rational leg = distance(space, a, b);
  if (distance(space, b, c) != leg) return false;
  const int factor = ap3_whole_to_leg_factor(space.kind);
  return distance(space, a, c) == Rational(factor) * leg;
}

bool collinear(const PointSet& A) {
  if (A.space().kind != SpaceKind::Euclidean) {
    throw std::invalid_argument("collinearity test expects a euclidean point set");
  }
  if (A.size() <= 2) return true;
  const auto& base = std::get<EuclideanPoint>(A[0]).coords;
  const auto& second = std::get<EuclideanPoint>(A[1]).coords;
  const std::size_t k = base.size();
  std::vector<Rational> dir(k);
  for (std::size_t i = 0; i < k; ++i) dir[i] = second[i] - base[i];
  for (std::size_t pi = 2; pi < A.size(); ++pi) {
    const auto& coords = std::get<EuclideanPoint>(A[pi]).coords;
    std::vector<Rational> rel(k);
    for (std::size_t i = 0; i < k; ++i) rel[i] = coords[i] - base[i];
    // rel must be parallel to dir: all 2x2 minors vanish.
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (dir[i] * rel[j] != dir[j] * rel[i]) return false;
      }
    }
  }
  return true;
}

}  // namespace ap3

#include "ap3/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ap3/circle.hpp"

namespace ap3 {

namespace {

void require_divisible_by_4(int n, const char* family) {
  if (n <= 0 || n % 4 != 0) {
    throw std::invalid_argument(std::string(family) + " needs n > 0 divisible by 4, got n=" +
                                std::to_string(n));
  }
}

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<Rational> spread_turns(int n, const Rational& offset) {
  std::vector<Rational> turns;
  turns.reserve(n);
  for (int k = 0; k < n; ++k) turns.push_back(rotate(offset, Rational(k, n)));
  return turns;
}

PointSet circle_set(std::vector<Rational> turns) {
  std::vector<Point> pts;
  pts.reserve(turns.size());
  for (auto& t : turns) pts.push_back(circle_point(std::move(t)));
  return PointSet(Space::circle(), std::move(pts));
}

}  // namespace

PointSet line_ap(int n) {
  if (n < 0) throw std::invalid_argument("line progression needs n >= 0");
  std::vector<Point> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) pts.push_back(line_point(Rational(k)));
  return PointSet(Space::line(), std::move(pts));
}

PointSet evenly_spread(int n, const Rational& offset) {
  if (n < 2) throw std::invalid_argument("evenly spread set needs n >= 2");
  return circle_set(spread_turns(n, offset));
}

PointSet f_minus1(int n, int drop_index) {
  require_divisible_by_4(n, "f_minus1");
  const int drop = mod(drop_index, n);
  std::vector<Rational> turns;
  turns.reserve(n - 1);
  for (int k = 0; k < n; ++k) {
    if (k != drop) turns.push_back(Rational(k, n));
  }
  return circle_set(std::move(turns));
}

PointSet f_minus2(int n, int i, int j) {
  require_divisible_by_4(n, "f_minus2");
  const int a = mod(i, n);
  const int b = mod(j, n);
  if (a == b) throw std::invalid_argument("f_minus2 needs two distinct points to drop");
  const int gap = mod(b - a, n);
  // Arc distance between grid points a and b is min(gap, n-gap)/n.
  if (std::min(gap, n - gap) * 4 > n) {
    throw std::invalid_argument(
        "f_minus2 condition violated: dropped points are more than a quarter turn apart");
  }
  // Both arc midpoints land on the grid exactly when the index gap is even.
  if (gap % 2 != 0) {
    throw std::invalid_argument(
        "f_minus2 condition violated: arc midpoints of the dropped pair are not in the set");
  }
  std::vector<Rational> turns;
  turns.reserve(n - 2);
  for (int k = 0; k < n; ++k) {
    if (k != a && k != b) turns.push_back(Rational(k, n));
  }
  return circle_set(std::move(turns));
}

PointSet f_plus1(int n, int anchor_index) {
  require_divisible_by_4(n, "f_plus1");
  const int anchor = mod(anchor_index, n);
  std::vector<Rational> turns = spread_turns(n, Rational(0));
  // Half a grid step behind the anchor; rotating by 1/(2n) returns it to the grid.
  turns.push_back(rotate(Rational(anchor, n), -half_step(n)));
  return circle_set(std::move(turns));
}

PointSet f_plus2(int n, int anchor_i, int anchor_j) {
  require_divisible_by_4(n, "f_plus2");
  const int a = mod(anchor_i, n);
  const int b = mod(anchor_j, n);
  if (a == b) throw std::invalid_argument("f_plus2 needs two distinct added points");
  // Added points sit at (2a-1)/(2n) and (2b-1)/(2n); their mutual arc
  // midpoints are grid points exactly when the anchor gap is odd.
  if (mod(b - a, n) % 2 != 1) {
    throw std::invalid_argument(
        "f_plus2 condition violated: arc midpoints of the added pair are not in the set");
  }
  std::vector<Rational> turns = spread_turns(n, Rational(0));
  turns.push_back(rotate(Rational(a, n), -half_step(n)));
  turns.push_back(rotate(Rational(b, n), -half_step(n)));
  return circle_set(std::move(turns));
}

PointSet tree_ball(int degree, int d0) {
  if (degree < 2) throw std::invalid_argument("tree ball needs degree >= 2");
  if (d0 < 0) throw std::invalid_argument("tree ball needs radius >= 0");
  std::vector<Point> pts;
  pts.push_back(tree_point({}));
  std::vector<std::vector<int>> frontier = {{}};
  for (int depth = 1; depth <= d0; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& path : frontier) {
      const int fanout = path.empty() ? degree : degree - 1;
      for (int child = 0; child < fanout; ++child) {
        auto extended = path;
        extended.push_back(child);
        pts.push_back(tree_point(extended));
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return PointSet(Space::regular_tree(degree), std::move(pts));
}

PointSet lattice_ball(int dim, int d0) {
  if (dim < 1) throw std::invalid_argument("lattice ball needs dimension >= 1");
  if (d0 < 0) throw std::invalid_argument("lattice ball needs radius >= 0");
  std::vector<Point> pts;
  std::vector<long long> coords(dim, 0);
  // Depth-first sweep in lexicographic order, pruning on the remaining L1 budget.
  const auto enumerate = [&](auto&& self, int pos, long long budget) -> void {
    if (pos == dim) {
      pts.push_back(lattice_point(coords));
      return;
    }
    for (long long v = -budget; v <= budget; ++v) {
      coords[pos] = v;
      self(self, pos + 1, budget - (v < 0 ? -v : v));
    }
  };
  enumerate(enumerate, 0, d0);
  return PointSet(Space::lattice(dim), std::move(pts));
}

PointSet bipartite_split(int nl, int nr) {
  if (nl < 0 || nr < 0) throw std::invalid_argument("bipartite split needs nonnegative sizes");
  std::vector<Point> pts;
  pts.reserve(nl + nr);
  for (int k = 0; k < nl; ++k) pts.push_back(bipartite_point(Side::L, k));
  for (int k = 0; k < nr; ++k) pts.push_back(bipartite_point(Side::R, k));
  return PointSet(Space::complete_bipartite(), std::move(pts));
}

PointSet radial_star(int n) {
  if (n < 1) throw std::invalid_argument("radial star needs n >= 1");
  std::vector<Point> pts;
  pts.reserve(n);
  pts.push_back(radial_point(Rational(0), Rational(0)));
  for (int k = 0; k + 1 < n; ++k) pts.push_back(radial_point(Rational(1), Rational(k, n - 1)));
  return PointSet(Space::radial_plane(), std::move(pts));
}

PointSet equator_config(int n) {
  if (n < 3) throw std::invalid_argument("equator configuration needs n >= 3");
  std::vector<Rational> equator_turns;
  switch (n % 4) {
    case 1: {
      const PointSet base = f_minus1(n - 1, 0);
      for (const Point& p : base.points()) equator_turns.push_back(std::get<CirclePoint>(p).turn);
      break;
    }
    case 3: {
      if (n == 3) {
        equator_turns.push_back(Rational(0));
        break;
      }
      const PointSet base = f_plus1(n - 3, 0);
      for (const Point& p : base.points()) equator_turns.push_back(std::get<CirclePoint>(p).turn);
      break;
    }
    default: {  // n even: evenly spread n-2 points
      for (int k = 0; k < n - 2; ++k) equator_turns.push_back(Rational(k, n - 2));
      break;
    }
  }
  std::vector<Point> pts;
  pts.reserve(n);
  pts.push_back(pole_point(Pole::North));
  pts.push_back(pole_point(Pole::South));
  for (auto& t : equator_turns) pts.push_back(equator_embed(t));
  return PointSet(Space::equator_poles(), std::move(pts));
}

}  // namespace ap3

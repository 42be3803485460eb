#include "ap3/sampling.hpp"

#include <set>
#include <stdexcept>

namespace ap3 {

namespace {

long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::mt19937_64& rng, long long max_abs_num, long long max_den) {
  return Rational(pick(rng, -max_abs_num, max_abs_num), pick(rng, 1, max_den));
}

Rational random_turn(std::mt19937_64& rng, long long max_den = 48) {
  const long long q = pick(rng, 1, max_den);
  return Rational(pick(rng, 0, q - 1), q);
}

// Keeps drawing candidates until n distinct points accumulate.
template <typename Gen>
PointSet fill_distinct(Space space, std::size_t n, Gen&& gen) {
  std::set<Point> seen;
  std::vector<Point> points;
  std::size_t attempts = 0;
  while (points.size() < n) {
    if (++attempts > 1000 * (n + 1)) {
      throw std::runtime_error("sampler failed to find enough distinct points");
    }
    Point p = gen();
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  return PointSet(std::move(space), std::move(points));
}

}  // namespace

PointSet sample_line(std::size_t n, std::mt19937_64& rng) {
  return fill_distinct(Space::line(), n,
                       [&] { return line_point(random_rational(rng, 60, 12)); });
}

PointSet sample_euclidean(int dim, std::size_t n, std::mt19937_64& rng) {
  return fill_distinct(Space::euclidean(dim), n, [&] {
    std::vector<Rational> coords;
    coords.reserve(dim);
    for (int i = 0; i < dim; ++i) coords.push_back(random_rational(rng, 20, 8));
    return euclidean_point(std::move(coords));
  });
}

PointSet sample_circle(std::size_t n, std::mt19937_64& rng) {
  return fill_distinct(Space::circle(), n, [&] { return circle_point(random_turn(rng)); });
}

PointSet sample_equator_poles(std::size_t n, std::mt19937_64& rng) {
  return fill_distinct(Space::equator_poles(), n, [&]() -> Point {
    const std::uint64_t roll = rng() % 8;
    if (roll == 0) return pole_point(Pole::North);
    if (roll == 1) return pole_point(Pole::South);
    return equator_point(random_turn(rng));
  });
}

PointSet sample_regular_tree(int degree, std::size_t n, std::mt19937_64& rng) {
  return fill_distinct(Space::regular_tree(degree), n, [&] {
    const int depth = static_cast<int>(pick(rng, 0, 5));
    std::vector<int> path;
    path.reserve(depth);
    for (int d = 0; d < depth; ++d) {
      const int fanout = d == 0 ? degree : degree - 1;
      path.push_back(static_cast<int>(pick(rng, 0, fanout - 1)));
    }
    return tree_point(std::move(path));
  });
}

PointSet sample_lattice(int dim, std::size_t n, std::mt19937_64& rng) {
  const long long extent = dim == 1 ? 40 : 6;
  return fill_distinct(Space::lattice(dim), n, [&] {
    std::vector<long long> coords;
    coords.reserve(dim);
    for (int i = 0; i < dim; ++i) coords.push_back(pick(rng, -extent, extent));
    return lattice_point(std::move(coords));
  });
}

namespace {

std::vector<std::pair<int, int>> random_spanning_tree(int vertices, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < vertices; ++v) {
    edges.emplace_back(static_cast<int>(pick(rng, 0, v - 1)), v);
  }
  return edges;
}

PointSet all_vertices(Space space) {
  std::vector<Point> pts;
  pts.reserve(space.vertex_count);
  for (int v = 0; v < space.vertex_count; ++v) pts.push_back(graph_point(v));
  return PointSet(std::move(space), std::move(pts));
}

}  // namespace

PointSet sample_connected_graph(int vertices, std::mt19937_64& rng) {
  auto edges = random_spanning_tree(vertices, rng);
  std::set<std::pair<int, int>> present(edges.begin(), edges.end());
  const int extra = static_cast<int>(pick(rng, 0, vertices));
  for (int k = 0; k < extra; ++k) {
    int u = static_cast<int>(pick(rng, 0, vertices - 1));
    int v = static_cast<int>(pick(rng, 0, vertices - 1));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (present.insert({u, v}).second) edges.emplace_back(u, v);
  }
  return all_vertices(Space::finite_graph(vertices, std::move(edges)));
}

PointSet sample_tree_graph(int vertices, std::mt19937_64& rng) {
  return all_vertices(Space::finite_graph(vertices, random_spanning_tree(vertices, rng)));
}

PointSet sample_radial_plane(std::size_t n, std::mt19937_64& rng) {
  return fill_distinct(Space::radial_plane(), n, [&]() -> Point {
    if (rng() % 6 == 0) return radial_point(Rational(0), Rational(0));
    return radial_point(Rational(pick(rng, 1, 30), pick(rng, 1, 6)), random_turn(rng, 24));
  });
}

PointSet sample_complete_bipartite(std::size_t n, std::mt19937_64& rng) {
  const long long spread = static_cast<long long>(n) + 4;
  return fill_distinct(Space::complete_bipartite(), n, [&] {
    return bipartite_point(rng() % 2 == 0 ? Side::L : Side::R, pick(rng, 0, spread));
  });
}

PointSet sample_pointset(SpaceKind kind, std::size_t n, std::mt19937_64& rng) {
  switch (kind) {
    case SpaceKind::Line: return sample_line(n, rng);
    case SpaceKind::Euclidean: return sample_euclidean(static_cast<int>(pick(rng, 1, 3)), n, rng);
    case SpaceKind::Circle: return sample_circle(n, rng);
    case SpaceKind::EquatorPoles: return sample_equator_poles(n, rng);
    case SpaceKind::RegularTree:
      return sample_regular_tree(static_cast<int>(pick(rng, 3, 5)), n, rng);
    case SpaceKind::Lattice: return sample_lattice(static_cast<int>(pick(rng, 1, 3)), n, rng);
    case SpaceKind::FiniteGraph: {
      // Ground graph a bit larger than the sample, points = all its vertices
      // up to n: keep it simple by sizing the graph to n (n >= 1).
      const int vertices = static_cast<int>(std::max<std::size_t>(n, 1));
      PointSet all = sample_connected_graph(vertices, rng);
      if (n == all.size()) return all;
      std::vector<Point> pts(all.points().begin(), all.points().begin() + n);
      return PointSet(all.space(), std::move(pts));
    }
    case SpaceKind::RadialPlane: return sample_radial_plane(n, rng);
    case SpaceKind::CompleteBipartite: return sample_complete_bipartite(n, rng);
  }
  throw std::invalid_argument("unknown space kind");
}

}  // namespace ap3

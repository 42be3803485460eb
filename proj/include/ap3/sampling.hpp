#pragma once

#include <random>

#include "ap3/space.hpp"

namespace ap3 {

// Random point-set generators for the property suites and bound audits.
// All draw from bounded rational/integer grids so every sample stays exact
// and desk-scale. Duplicate candidates are rejected until the set has the
// requested size.

PointSet sample_line(std::size_t n, std::mt19937_64& rng);
PointSet sample_euclidean(int dim, std::size_t n, std::mt19937_64& rng);
PointSet sample_circle(std::size_t n, std::mt19937_64& rng);
PointSet sample_equator_poles(std::size_t n, std::mt19937_64& rng);
PointSet sample_regular_tree(int degree, std::size_t n, std::mt19937_64& rng);
PointSet sample_lattice(int dim, std::size_t n, std::mt19937_64& rng);
// Random connected graph (spanning tree plus extra edges), points = all vertices.
PointSet sample_connected_graph(int vertices, std::mt19937_64& rng);
// Random tree graph (acyclic, connected), points = all vertices. Trees have
// unique midpoints, so they feed the unique-midpoint cap audit.
PointSet sample_tree_graph(int vertices, std::mt19937_64& rng);
PointSet sample_radial_plane(std::size_t n, std::mt19937_64& rng);
PointSet sample_complete_bipartite(std::size_t n, std::mt19937_64& rng);

// A random set of the given kind and size (dimensions and degrees drawn
// from small ranges where the kind has parameters).
PointSet sample_pointset(SpaceKind kind, std::size_t n, std::mt19937_64& rng);

}  // namespace ap3

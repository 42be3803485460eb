#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ap3 {

// Dense all-pairs shortest-path table for a finite connected graph.
// Entries are BFS hop counts: symmetric, zero diagonal, triangle inequality
// by construction. Vertex counts are desk-scale (at most a few thousand).
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {}

  int size() const { return n_; }
  int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<int> d_;
};

// BFS from every vertex. Throws std::invalid_argument on bad vertex ids or
// self-loops, and std::runtime_error if the graph is disconnected (the graph
// metric is undefined there).
DistanceMatrix graph_apsp(const std::vector<std::pair<int, int>>& edges, int vertex_count);

}  // namespace ap3

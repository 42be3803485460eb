#include "ap3/graph.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace ap3 {

DistanceMatrix graph_apsp(const std::vector<std::pair<int, int>>& edges, int vertex_count) {
  if (vertex_count <= 0) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") references a vertex outside 0.." +
                                  std::to_string(vertex_count - 1));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  const int n = vertex_count;
  std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (row[v] < 0) {
        throw std::runtime_error("graph is disconnected (vertex " + std::to_string(v) +
                                 " unreachable from " + std::to_string(s) +
                                 "); the graph metric requires a connected graph");
      }
    }
  }
  return DistanceMatrix(n, std::move(d));
}

}  // namespace ap3

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are
/// sorted and symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse to one. Throws IndexOutOfRange or SelfLoop.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

Graph build_graph(int n, std::span<const Edge> edges);

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

struct GraphMetrics {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  int diameter = 0;  // kInfiniteDistance when disconnected
  std::int64_t zagreb_z1 = 0;
  bool is_connected = false;
  bool is_bipartite = false;
  bool is_triangle_free = false;
  bool is_regular = false;
  std::optional<int> regularity_k;
  // |{v : ecc(v) >= 3}|; the set is defined for trees, computed here for any graph.
  int eccentricity_set_size = 0;
  int max_degree_count = 0;  // vertices attaining max_degree

  bool is_tree() const noexcept { return is_connected && m == n - 1; }
  bool is_complete() const noexcept { return m == n * (n - 1) / 2; }
};

GraphMetrics metrics(const Graph& g);

/// BFS distances from `source`; unreachable vertices get kInfiniteDistance.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Per-vertex eccentricity; kInfiniteDistance for every vertex if disconnected.
std::vector<int> eccentricities(const Graph& g);

Graph complement(const Graph& g);

}  // namespace spectra

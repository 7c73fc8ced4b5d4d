#include "spectra/graph.hpp"

#include <algorithm>
#include <deque>

#include "spectra/error.hpp"

namespace spectra {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::BadSets: return "BadSets";
    case ErrorCode::InvalidShift: return "InvalidShift";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                      std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adj_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), kInfiniteDistance);
  std::deque<int> queue;
  dist.at(source) = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> eccentricities(const Graph& g) {
  std::vector<int> ecc(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    ecc[v] = *std::max_element(dist.begin(), dist.end());
  }
  return ecc;
}

namespace {

bool check_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) return false;
      if (*ia < *ib) ++ia; else ++ib;
    }
  }
  return true;
}

}  // namespace

GraphMetrics metrics(const Graph& g) {
  GraphMetrics out;
  out.n = g.order();
  out.m = g.size();
  if (out.n == 0) {
    out.is_connected = true;
    out.is_bipartite = true;
    out.is_triangle_free = true;
    return out;
  }

  out.max_degree = 0;
  out.min_degree = out.n;
  for (int v = 0; v < out.n; ++v) {
    int d = g.degree(v);
    out.max_degree = std::max(out.max_degree, d);
    out.min_degree = std::min(out.min_degree, d);
    out.zagreb_z1 += static_cast<std::int64_t>(d) * d;
  }
  for (int v = 0; v < out.n; ++v) {
    if (g.degree(v) == out.max_degree) ++out.max_degree_count;
  }
  out.is_regular = out.max_degree == out.min_degree;
  if (out.is_regular) out.regularity_k = out.max_degree;

  auto ecc = eccentricities(g);
  out.diameter = *std::max_element(ecc.begin(), ecc.end());
  out.is_connected = out.diameter != kInfiniteDistance;
  out.eccentricity_set_size =
      static_cast<int>(std::count_if(ecc.begin(), ecc.end(), [](int e) { return e >= 3; }));

  out.is_bipartite = check_bipartite(g);
  out.is_triangle_free = check_triangle_free(g);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace spectra

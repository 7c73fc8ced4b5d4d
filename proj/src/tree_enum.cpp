#include "spectra/tree_enum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

// Level sequences are carried as strings of small depth values; for
// n <= 15 they fit in the small-string buffer, which keeps the Pruefer
// oracle allocation-free in its hot loop.
using Key = std::string;

struct Workspace {
  std::vector<int> parent;
  std::vector<int> order;  // BFS order from the root
  std::vector<int> subtree;
  std::vector<Key> seq;
};

// Lexicographically maximal level sequence of the tree rooted at `root`.
Key rooted_key(std::span<const std::vector<int>> adj, int root, Workspace& ws) {
  const int n = static_cast<int>(adj.size());
  ws.parent.assign(n, -1);
  ws.order.clear();
  ws.order.push_back(root);
  ws.parent[root] = root;
  for (std::size_t h = 0; h < ws.order.size(); ++h) {
    int u = ws.order[h];
    for (int w : adj[u]) {
      if (ws.parent[w] == -1) {
        ws.parent[w] = u;
        ws.order.push_back(w);
      }
    }
  }
  ws.seq.resize(n);
  std::vector<const Key*> kids;
  for (int h = n - 1; h >= 0; --h) {
    const int u = ws.order[h];
    kids.clear();
    for (int w : adj[u])
      if (ws.parent[w] == u && w != root) kids.push_back(&ws.seq[w]);
    std::sort(kids.begin(), kids.end(), [](const Key* a, const Key* b) { return *a > *b; });
    Key& out = ws.seq[u];
    out.clear();
    out.push_back(0);
    for (const Key* k : kids)
      for (char c : *k) out.push_back(static_cast<char>(c + 1));
  }
  return ws.seq[root];
}

Key canonical_key(std::span<const std::vector<int>> adj, Workspace& ws) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return {};
  // Subtree sizes from vertex 0 to locate the centroid(s).
  ws.parent.assign(n, -1);
  ws.order.clear();
  ws.order.push_back(0);
  ws.parent[0] = 0;
  for (std::size_t h = 0; h < ws.order.size(); ++h) {
    int u = ws.order[h];
    for (int w : adj[u]) {
      if (ws.parent[w] == -1) {
        ws.parent[w] = u;
        ws.order.push_back(w);
      }
    }
  }
  ws.subtree.assign(n, 1);
  for (int h = n - 1; h > 0; --h) ws.subtree[ws.parent[ws.order[h]]] += ws.subtree[ws.order[h]];

  int centroids[2] = {-1, -1};
  int found = 0;
  for (int v = 0; v < n; ++v) {
    int worst = n - ws.subtree[v];
    for (int w : adj[v])
      if (ws.parent[w] == v && w != v) worst = std::max(worst, ws.subtree[w]);
    if (2 * worst <= n && found < 2) centroids[found++] = v;
  }
  Key best = rooted_key(adj, centroids[0], ws);
  if (found == 2) {
    Key other = rooted_key(adj, centroids[1], ws);
    if (other > best) best = std::move(other);
  }
  return best;
}

CanonicalTreeCode from_key(const Key& key) {
  CanonicalTreeCode code;
  code.levels.assign(key.begin(), key.end());
  return code;
}

}  // namespace

Graph CanonicalTreeCode::to_graph() const {
  const int n = order();
  std::vector<Edge> edges;
  std::vector<int> last_at_level(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int d = levels[i];
    if (i == 0 ? d != 0 : (d < 1 || d > n || last_at_level[d - 1] < 0)) {
      throw Error(ErrorCode::ParseError, "invalid level sequence " + to_string());
    }
    if (i > 0) edges.emplace_back(last_at_level[d - 1], i);
    last_at_level[d] = i;
    for (int k = d + 1; k <= n; ++k) last_at_level[k] = -1;
  }
  return Graph::from_edges(n, edges);
}

std::string CanonicalTreeCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out.push_back('-');
    out += std::to_string(levels[i]);
  }
  return out;
}

CanonicalTreeCode CanonicalTreeCode::parse(const std::string& text) {
  CanonicalTreeCode code;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, '-')) {
    try {
      code.levels.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad tree code '" + text + "'");
    }
  }
  return code;
}

CanonicalTreeCode canonical_code(const Graph& tree) {
  if (tree.order() == 0) return {};
  const auto m = metrics(tree);
  if (!m.is_tree()) throw Error(ErrorCode::NotATree, "graph is not a tree");
  std::vector<std::vector<int>> adj(tree.order());
  for (int v = 0; v < tree.order(); ++v) adj[v].assign(tree.neighbors(v).begin(), tree.neighbors(v).end());
  return canonical_code_unchecked(adj);
}

CanonicalTreeCode canonical_code_unchecked(std::span<const std::vector<int>> adjacency) {
  Workspace ws;
  return from_key(canonical_key(adjacency, ws));
}

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "tree order must be >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::BudgetExceeded,
                "free tree enumeration limited to n <= " + std::to_string(kMaxEnumerationOrder));
  }
}

// Beyer-Hedetniemi successor on canonical rooted level sequences, which
// visits every rooted tree once in decreasing lexicographic order.
bool FreeTreeGenerator::advance_rooted() {
  if (!started_) {
    started_ = true;
    seq_.resize(n_);
    for (int i = 0; i < n_; ++i) seq_[i] = i;
    return true;
  }
  int p = n_ - 1;
  while (p > 0 && seq_[p] <= 1) --p;
  if (p == 0) return false;
  int q = p - 1;
  while (seq_[q] != seq_[p] - 1) --q;
  const int shift = p - q;
  for (int i = p; i < n_; ++i) seq_[i] = seq_[i - shift];
  return true;
}

bool FreeTreeGenerator::accept() {
  // The root must be a centroid: every root subtree has at most n/2 vertices.
  int largest = 0;
  int current = 0;
  for (int i = 1; i < n_; ++i) {
    if (seq_[i] == 1) {
      largest = std::max(largest, current);
      current = 0;
    }
    ++current;
  }
  largest = std::max(largest, current);
  if (2 * largest > n_) return false;
  CanonicalTreeCode candidate;
  candidate.levels = seq_;
  if (2 * largest == n_) {
    // Two centroids: keep only the orientation that is canonical.
    return canonical_code(candidate.to_graph()) == candidate;
  }
  return true;
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  while (advance_rooted()) {
    if (accept()) {
      current_.levels = seq_;
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<CanonicalTreeCode> enumerate_free_tree_codes(int n) {
  std::vector<CanonicalTreeCode> out;
  FreeTreeGenerator gen(n);
  while (gen.next()) out.push_back(gen.code());
  return out;
}

std::vector<Graph> enumerate_free_trees(int n) {
  std::vector<Graph> out;
  FreeTreeGenerator gen(n);
  while (gen.next()) out.push_back(gen.graph());
  return out;
}

Graph prufer_decode(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) throw Error(ErrorCode::IndexOutOfRange, "Pruefer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  // Linear-time decoding: `leaf` scans forward, `ptr` tracks the smallest leaf.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edges(n, edges);
}

std::size_t prufer_oracle_count(int n) {
  if (n < 2) throw Error(ErrorCode::BadParams, "Pruefer oracle needs n >= 2");
  if (n > kMaxPruferOrder) {
    throw Error(ErrorCode::BudgetExceeded, "Pruefer oracle limited to n <= " + std::to_string(kMaxPruferOrder));
  }
  std::set<Key> classes;
  std::vector<int> seq(n - 2, 0);
  std::vector<std::vector<int>> adj(n);
  Workspace ws;
  while (true) {
    const Graph g = prufer_decode(seq);
    for (int v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    classes.insert(canonical_key(adj, ws));
    int pos = n - 3;
    while (pos >= 0 && ++seq[pos] == n) seq[pos--] = 0;
    if (pos < 0) break;
  }
  return classes.size();
}

}  // namespace spectra

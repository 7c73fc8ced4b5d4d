#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

inline constexpr int kMaxEnumerationOrder = 20;
inline constexpr int kMaxPruferOrder = 9;

/// Isomorphism-complete key for a free tree: the lexicographically
/// maximal level sequence of the tree rooted at a centroid. For trees with
/// two centroids, the larger of the two rooted sequences is used.
struct CanonicalTreeCode {
  std::vector<int> levels;

  int order() const noexcept { return static_cast<int>(levels.size()); }
  /// Preorder labeling: vertex i's parent is the last j < i one level up.
  Graph to_graph() const;
  /// Dash-separated depths, e.g. "0-1-2-1".
  std::string to_string() const;
  static CanonicalTreeCode parse(const std::string& text);

  auto operator<=>(const CanonicalTreeCode&) const = default;
};

/// Throws NotATree.
CanonicalTreeCode canonical_code(const Graph& tree);

/// Canonical code from adjacency lists known to form a tree.
CanonicalTreeCode canonical_code_unchecked(std::span<const std::vector<int>> adjacency);

/// Streams one representative per isomorphism class of free trees on n
/// vertices, in decreasing order of canonical code.
class FreeTreeGenerator {
 public:
  /// Throws BudgetExceeded for n > kMaxEnumerationOrder, BadParams for n < 1.
  explicit FreeTreeGenerator(int n);

  /// Advances to the next tree; false when exhausted. Must be called once
  /// before the first access.
  bool next();

  const CanonicalTreeCode& code() const noexcept { return current_; }
  Graph graph() const { return current_.to_graph(); }

 private:
  bool advance_rooted();
  bool accept();

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> seq_;
  CanonicalTreeCode current_;
};

std::vector<CanonicalTreeCode> enumerate_free_tree_codes(int n);
std::vector<Graph> enumerate_free_trees(int n);

/// Labeled tree on n = seq.size() + 2 vertices from its Pruefer sequence.
Graph prufer_decode(std::span<const int> seq);

/// Counts isomorphism classes among all n^(n-2) labeled trees by
/// canonical-code deduplication. Requires 2 <= n <= kMaxPruferOrder.
std::size_t prufer_oracle_count(int n);

}  // namespace spectra

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

// Named graph families. Each family fixes a deterministic vertex labeling.

/// P_n: 0-1-2-...-(n-1).
Graph path_graph(int n);

/// K_{1,n-1}: center 0, leaves 1..n-1.
Graph star_graph(int n);

/// C_n (n >= 3): 0-1-...-(n-1)-0.
Graph cycle_graph(int n);

/// K_n.
Graph complete_graph(int n);

/// Petersen graph: outer 5-cycle 0..4, spokes i-(i+5), inner pentagram
/// (5+i)-(5+(i+2)%5).
Graph petersen_graph();

/// Caterpillar T_{Delta,D} with n = (Delta-1)(D-1) vertices: spine
/// 0..D-2 (a path), then Delta-2 pendants on each spine vertex, labeled
/// spine vertex by spine vertex. End spine vertices have degree Delta-1,
/// inner ones Delta. Requires Delta >= 3, D >= 3.
Graph caterpillar_graph(int max_degree, int diameter);

/// Broom B_n^t: star center 0 with leaves 1..t, path t+1..n-1 with t+1
/// joined to the center. Requires 1 <= t <= n-3.
Graph broom_graph(int n, int t);

/// T*: center 0 with legs 1..n/2; legs 1..n/2-1 are extended by the
/// vertices n/2+1..n-1 (leg i gets n/2+i). Requires n even, n >= 6.
Graph t_star_graph(int n);

/// Parsed `name[:p1[:p2]]` family descriptor, e.g. "broom:9:3".
struct FamilySpec {
  std::string name;
  std::vector<int> params;

  std::string to_string() const;
};

FamilySpec parse_family_spec(std::string_view text);

/// Builds the graph for a family descriptor. Throws BadParams.
Graph make_family(const FamilySpec& spec);

}  // namespace spectra

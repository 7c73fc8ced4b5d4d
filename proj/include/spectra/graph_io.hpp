#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "spectra/graph.hpp"

namespace spectra {

inline constexpr int kMaxGraph6Order = 62;

/// Edge-list text: first line `n`, then `u v` per line, 0-based.
/// Blank lines and `#` comments are ignored. Throws ParseError.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6 encoding for n <= 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Reads a graph file, detecting edge-list vs graph6 from the first
/// significant line. Throws IoError or ParseError.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace spectra

#include "spectra/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

std::string_view strip(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  return line;
}

bool parse_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::istringstream ss{std::string(line)};
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
    out.push_back(value);
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::vector<long long> values;
  int line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = strip(raw);
    if (line.empty()) continue;
    if (!parse_ints(line, values)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": not integers");
    }
    if (n < 0) {
      if (values.size() != 1 || values[0] < 0 || values[0] > 1'000'000) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected vertex count");
      }
      n = values[0];
      continue;
    }
    if (values.size() != 2) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (values[0] < 0 || values[1] < 0 || values[0] >= n || values[1] >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(line_no));
    }
    edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing vertex count");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::BadParams, "graph6 supports n <= 62");
  }
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty graph6 string");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 0 || n > kMaxGraph6Order) throw Error(ErrorCode::ParseError, "graph6 order byte out of range");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (pairs + 5) / 6;
  if (text.size() != expected) {
    throw Error(ErrorCode::ParseError, "graph6 length " + std::to_string(text.size()) +
                                           ", expected " + std::to_string(expected));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) throw Error(ErrorCode::ParseError, "graph6 byte out of range");
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  std::istringstream lines(content);
  std::string raw;
  while (std::getline(lines, raw)) {
    auto line = strip(raw);
    if (line.empty()) continue;
    bool numeric = std::all_of(line.begin(), line.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)) ||
             c == '-';
    });
    if (numeric) {
      std::istringstream again(content);
      return read_edge_list(again);
    }
    return from_graph6(line);
  }
  throw Error(ErrorCode::ParseError, path.string() + " is empty");
}

}  // namespace spectra

#include "spectra/families.hpp"

#include <charconv>

#include "spectra/error.hpp"

namespace spectra {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

Graph caterpillar_graph(int max_degree, int diameter) {
  require(max_degree >= 3, "caterpillar needs Delta >= 3");
  require(diameter >= 3, "caterpillar needs D >= 3");
  const int spine = diameter - 1;
  const int pendants = max_degree - 2;
  const int n = spine * (max_degree - 1);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    for (int j = 0; j < pendants; ++j) edges.emplace_back(i, next++);
  }
  return Graph::from_edges(n, edges);
}

Graph broom_graph(int n, int t) {
  require(t >= 1 && t <= n - 3, "broom needs 1 <= t <= n-3");
  std::vector<Edge> edges;
  for (int i = 1; i <= t; ++i) edges.emplace_back(0, i);
  edges.emplace_back(0, t + 1);
  for (int i = t + 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph t_star_graph(int n) {
  require(n >= 6 && n % 2 == 0, "t_star needs even n >= 6");
  const int half = n / 2;
  std::vector<Edge> edges;
  for (int i = 1; i <= half; ++i) edges.emplace_back(0, i);
  for (int i = 1; i < half; ++i) edges.emplace_back(i, half + i);
  return Graph::from_edges(n, edges);
}

std::string FamilySpec::to_string() const {
  std::string out = name;
  for (int p : params) out += ":" + std::to_string(p);
  return out;
}

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  std::size_t pos = text.find(':');
  spec.name = std::string(text.substr(0, pos));
  if (spec.name.empty()) throw Error(ErrorCode::ParseError, "empty family name");
  while (pos != std::string_view::npos) {
    std::size_t next = text.find(':', pos + 1);
    auto token = text.substr(pos + 1, next == std::string_view::npos ? next : next - pos - 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw Error(ErrorCode::ParseError, "bad family parameter '" + std::string(token) + "'");
    }
    spec.params.push_back(value);
    pos = next;
  }
  return spec;
}

Graph make_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    require(p.size() == k, spec.name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (spec.name == "path") { arity(1); return path_graph(p[0]); }
  if (spec.name == "star") { arity(1); return star_graph(p[0]); }
  if (spec.name == "cycle") { arity(1); return cycle_graph(p[0]); }
  if (spec.name == "complete") { arity(1); return complete_graph(p[0]); }
  if (spec.name == "petersen") { arity(0); return petersen_graph(); }
  if (spec.name == "caterpillar") { arity(2); return caterpillar_graph(p[0], p[1]); }
  if (spec.name == "broom") { arity(2); return broom_graph(p[0], p[1]); }
  if (spec.name == "tstar" || spec.name == "t_star") { arity(1); return t_star_graph(p[0]); }
  throw Error(ErrorCode::BadParams, "unknown family '" + spec.name + "'");
}

}  // namespace spectra

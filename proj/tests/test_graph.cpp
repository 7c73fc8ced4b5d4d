#include <gtest/gtest.h>

#include "spectra/error.hpp"
#include "spectra/families.hpp"
#include "spectra/graph.hpp"
#include "support/oracles.hpp"

using namespace spectra;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no spectra::Error thrown";
  return ErrorCode::BadParams;
}

}  // namespace

TEST(Graph, NormalizesAndDeduplicatesEdges) {
  const std::vector<Edge> edges{{1, 0}, {0, 1}, {2, 1}, {1, 2}, {0, 2}};
  const Graph g = Graph::from_edges(3, edges);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Graph, RejectsBadEdges) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_EQ(code_of([&] { Graph::from_edges(3, loop); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([&] { Graph::from_edges(3, out_of_range); }), ErrorCode::IndexOutOfRange);
}

TEST(Graph, EmptyAndSingleVertex) {
  const Graph g0 = Graph::from_edges(0, {});
  EXPECT_EQ(metrics(g0).n, 0);
  const auto m1 = metrics(Graph::from_edges(1, {}));
  EXPECT_TRUE(m1.is_connected);
  EXPECT_TRUE(m1.is_tree());
  EXPECT_EQ(m1.diameter, 0);
}

TEST(Metrics, Petersen) {
  const auto m = metrics(petersen_graph());
  EXPECT_EQ(m.n, 10);
  EXPECT_EQ(m.m, 15);
  EXPECT_TRUE(m.is_regular);
  EXPECT_EQ(m.regularity_k, 3);
  EXPECT_TRUE(m.is_triangle_free);
  EXPECT_FALSE(m.is_bipartite);
  EXPECT_EQ(m.diameter, 2);
  EXPECT_EQ(m.zagreb_z1, 90);
}

TEST(Metrics, Cycle10) {
  const auto m = metrics(cycle_graph(10));
  EXPECT_TRUE(m.is_bipartite);
  EXPECT_EQ(m.diameter, 5);
  EXPECT_EQ(m.zagreb_z1, 40);
  EXPECT_FALSE(metrics(cycle_graph(9)).is_bipartite);
  EXPECT_FALSE(metrics(cycle_graph(3)).is_triangle_free);
}

TEST(Metrics, DisconnectedGraph) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const auto m = metrics(Graph::from_edges(4, edges));
  EXPECT_FALSE(m.is_connected);
  EXPECT_EQ(m.diameter, kInfiniteDistance);
  EXPECT_EQ(eccentricities(Graph::from_edges(4, edges))[0], kInfiniteDistance);
}

TEST(Metrics, EccentricitySetOfPath) {
  // ecc on P7 = 6,5,4,3,4,5,6: every vertex has ecc >= 3.
  EXPECT_EQ(metrics(path_graph(7)).eccentricity_set_size, 7);
  // Star: center ecc 1, leaves ecc 2.
  EXPECT_EQ(metrics(star_graph(6)).eccentricity_set_size, 0);
  EXPECT_EQ(metrics(star_graph(6)).max_degree_count, 1);
}

TEST(Families, Shapes) {
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(star_graph(5).degree(0), 4);
  EXPECT_EQ(complete_graph(6).size(), 15);

  const Graph b = broom_graph(9, 3);
  const auto mb = metrics(b);
  EXPECT_TRUE(mb.is_tree());
  EXPECT_EQ(mb.max_degree, 4);
  EXPECT_EQ(mb.diameter, 6);

  const Graph c = caterpillar_graph(4, 5);
  const auto mc = metrics(c);
  EXPECT_EQ(mc.n, 12);
  EXPECT_TRUE(mc.is_tree());
  EXPECT_EQ(mc.max_degree, 4);
  EXPECT_EQ(mc.diameter, 5);

  // With diameter 3 the two spine vertices carry Delta - 2 pendants each.
  EXPECT_EQ(metrics(caterpillar_graph(5, 3)).max_degree, 4);
  EXPECT_EQ(metrics(caterpillar_graph(5, 3)).diameter, 3);

  const Graph t = t_star_graph(10);
  const auto mt = metrics(t);
  EXPECT_TRUE(mt.is_tree());
  EXPECT_EQ(mt.max_degree, 5);
  EXPECT_EQ(mt.diameter, 4);
}

TEST(Families, ParameterErrors) {
  EXPECT_EQ(code_of([] { broom_graph(6, 4); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { t_star_graph(7); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { cycle_graph(2); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { parse_family_spec("broom:x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { make_family(parse_family_spec("nosuch:3")); }), ErrorCode::BadParams);
}

TEST(Families, SpecRoundTrip) {
  const FamilySpec s = parse_family_spec("caterpillar:3:5");
  EXPECT_EQ(s.name, "caterpillar");
  EXPECT_EQ(s.params, (std::vector<int>{3, 5}));
  EXPECT_EQ(s.to_string(), "caterpillar:3:5");
  EXPECT_EQ(make_family(parse_family_spec("petersen")), petersen_graph());
  EXPECT_EQ(make_family(parse_family_spec("tstar:8")), t_star_graph(8));
}

TEST(GraphProperties, HandshakeAndComplementInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 13;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
    EXPECT_EQ(degree_sum, 2 * g.size());
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).size() + g.size(), n * (n - 1) / 2);
    if (n <= 12) EXPECT_EQ(metrics(g).is_bipartite, oracle::brute_bipartite(g));
  }
}

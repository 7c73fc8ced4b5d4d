#include <cmath>

#include <gtest/gtest.h>

#include "spectra/bounds.hpp"
#include "spectra/error.hpp"
#include "spectra/families.hpp"
#include "spectra/tree_enum.hpp"
#include "support/oracles.hpp"

using namespace spectra;

namespace {

const BoundReport& find(const std::vector<BoundReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::runtime_error("missing report " + name);
}

}  // namespace

// Reference values from tests/support/derive_values.py.
TEST(Bounds, Cycle10Values) {
  const auto p = make_profile(cycle_graph(10));
  const auto rs = evaluate_all(p);
  EXPECT_NEAR(p.rl(), 10.472135955, 1e-9);
  EXPECT_NEAR(find(rs, "th32_regular_triangle_free").value, 4.18990238371, 1e-10);
  EXPECT_NEAR(find(rs, "youliu_regular").value, 3.07477270849, 1e-10);
  EXPECT_NEAR(find(rs, "th31_shifted_trace").value, 2.38326615955, 1e-10);
  EXPECT_NEAR(find(rs, "cor31_bipartite").value, 2.39278662108, 1e-10);
  EXPECT_NEAR(find(rs, "th33_shifted_trace").value, 156.823768198, 1e-7);
  EXPECT_NEAR(find(rs, "th34_complement_sum").value, 2.64285714286, 1e-10);
  EXPECT_NEAR(find(rs, "th34_complement_sum").observed, 12.0751416198, 1e-9);
  EXPECT_NEAR(find(rs, "haemers_diameter").value, 5.52386449891, 1e-10);
  EXPECT_NEAR(find(rs, "kantorovich_kirchhoff").value, 127.24722801, 1e-8);
  EXPECT_NEAR(find(rs, "kantorovich_kirchhoff").observed, 82.5, 1e-9);
  EXPECT_NEAR(find(rs, "goldberg").value, 1.5, 1e-15);
  for (const auto& r : rs) EXPECT_TRUE(!r.applicable || r.holds) << r.name;
}

TEST(Bounds, PetersenEqualityCase) {
  const auto p = make_profile(petersen_graph());
  const auto r = th32_regular_trianglefree_lower(p);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.value, 2.5, 1e-12);
  EXPECT_NEAR(r.slack, 0.0, 1e-8);
  EXPECT_NEAR(youliu_regular_lower(p).value, 2.37979589711, 1e-10);
  EXPECT_NEAR(th34_complement_sum_lower(p).value, 2.5, 1e-12);
  EXPECT_NEAR(th34_complement_sum_lower(p).observed, 4.1, 1e-9);
}

TEST(Bounds, PathNineValues) {
  const auto p = make_profile(path_graph(9));
  const auto rs = evaluate_all(p);
  EXPECT_NEAR(find(rs, "th31_shifted_trace").value, 2.60995083394, 1e-10);
  EXPECT_NEAR(find(rs, "cor31_bipartite").value, 2.60183620018, 1e-10);
  EXPECT_NEAR(find(rs, "th33_shifted_trace").value, 371.501312561, 1e-7);
  EXPECT_NEAR(find(rs, "haemers_diameter").value, 8.77989885889, 1e-9);
  EXPECT_FALSE(find(rs, "th32_regular_triangle_free").applicable);
  EXPECT_EQ(find(rs, "th32_regular_triangle_free").reason, Reason::NotRegular);
}

TEST(Bounds, NotApplicableReasons) {
  const auto k5 = make_profile(complete_graph(5));
  EXPECT_EQ(goldberg_lower(k5).reason, Reason::IsComplete);
  EXPECT_FALSE(goldberg_lower(k5).holds);
  EXPECT_EQ(haemers_diameter_upper(k5).reason, Reason::TriviallySatisfied);
  EXPECT_EQ(cor31_bipartite_lower(k5).reason, Reason::NotBipartite);
  EXPECT_EQ(th34_complement_sum_lower(k5).reason, Reason::ComplementDisconnected);
  EXPECT_EQ(th32_regular_trianglefree_lower(make_profile(cycle_graph(3))).reason, Reason::HasTriangle);
  EXPECT_EQ(th41_condition(make_profile(star_graph(8))).reason, Reason::IsStar);
  EXPECT_EQ(th11_youliu_condition(make_profile(path_graph(9))).reason, Reason::TooSmall);
  EXPECT_EQ(tree_mu1_upper(k5).reason, Reason::NotATree);
}

TEST(Bounds, DisplayFormulasMatchTraceRoute) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 12;
    const auto p = make_profile(oracle::random_connected_graph(n, 0.3, rng));
    const auto& m = p.metrics;
    const auto shift = default_shift(p.spectrum);
    ASSERT_TRUE(shift.valid);
    const auto lo = th31_lower(p, shift);
    EXPECT_NEAR(lo.value, th31_display_value(n, m.m, m.zagreb_z1, shift.alpha), 1e-9 * lo.value);
    const auto hi = th33_upper(p, shift);
    const double tau = spanning_tree_count(p.graph).get_d();
    EXPECT_NEAR(hi.value, th33_display_value(n, m.m, m.zagreb_z1, shift.alpha, tau), 1e-8 * hi.value);
    if (m.is_bipartite) {
      const auto c = cor31_bipartite_lower(p);
      EXPECT_NEAR(c.value, cor31_display_value(n, m.m, m.zagreb_z1), 1e-9 * c.value);
    }
  }
}

TEST(Bounds, ShiftValidity) {
  const auto p = make_profile(cycle_graph(10));
  const double mu1 = p.spectrum.mu1();
  const double ac = p.spectrum.alg_conn();
  EXPECT_TRUE(make_shift(p.spectrum, mu1 / 10).valid);
  EXPECT_TRUE(make_shift(p.spectrum, ac / 10).valid);
  EXPECT_FALSE(make_shift(p.spectrum, 0.0).valid);
  EXPECT_FALSE(make_shift(p.spectrum, mu1).valid);
  try {
    th31_lower(p, make_shift(p.spectrum, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidShift);
  }
  EXPECT_THROW(th33_upper(p, make_shift(p.spectrum, 1.0)), Error);
  // Any valid alpha yields a valid lower bound.
  for (double na = ac; na <= mu1; na += (mu1 - ac) / 16) {
    const auto r = th31_lower(p, make_shift(p.spectrum, na / 10));
    EXPECT_TRUE(r.holds);
  }
}

TEST(Bounds, Omega) {
  // alpha = 0: Omega = n Z1 + 2mn - 4m^2.
  EXPECT_DOUBLE_EQ(shift_omega(10, 10, 40, 0.0), 400 + 200 - 400);
  EXPECT_DOUBLE_EQ(complement_sum_function(4, 2, 10), 2 + 8.0 / 6.0);
}

TEST(Bounds, CutDensity) {
  const auto p = make_profile(path_graph(5));
  const auto r = cut_density_check(p, {0}, {4});
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.observed, 1.0 / 16.0, 1e-15);
  const auto bad = [&](std::vector<int> x, std::vector<int> y) {
    try {
      cut_density_check(p, x, y);
    } catch (const Error& e) {
      return e.code() == ErrorCode::BadSets;
    }
    return false;
  };
  EXPECT_TRUE(bad({0}, {1}));
  EXPECT_TRUE(bad({0, 2}, {2, 4}));
  EXPECT_TRUE(bad({}, {3}));
  EXPECT_TRUE(bad({7}, {3}));
}

TEST(Bounds, TreeImplications) {
  // P_n has maximum diameter, so the diameter condition fires once n is
  // large enough; the conclusion R_L > n must then hold.
  const auto r = th41_condition(make_profile(path_graph(10)));
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.conclusion);
  EXPECT_TRUE(r.holds);

  // T* has |D(T*)| = n - 1, so the eccentricity condition applies.
  const auto ts = make_profile(t_star_graph(10));
  EXPECT_EQ(ts.metrics.eccentricity_set_size, 9);
  const auto t43 = th43_condition(ts);
  EXPECT_TRUE(t43.hypothesis);
  EXPECT_TRUE(t43.holds);

  // The path has every vertex in D(P_n): hypothesis false, vacuously true.
  const auto p43 = th43_condition(make_profile(path_graph(8)));
  EXPECT_TRUE(p43.applicable);
  EXPECT_FALSE(p43.hypothesis);
  EXPECT_TRUE(p43.holds);
  EXPECT_GT(p43.slack, 0);
}

TEST(Bounds, PropertySuiteOnRandomGraphs) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 12;
    const auto p = make_profile(oracle::random_connected_graph(n, 0.25, rng));
    for (const auto& r : evaluate_all(p)) {
      EXPECT_FALSE(std::isnan(r.value) || std::isinf(r.value)) << r.name;
      if (r.applicable) EXPECT_TRUE(r.holds) << r.name << " trial " << trial;
      if (r.holds) EXPECT_TRUE(r.applicable) << r.name;
    }
  }
}

TEST(Bounds, PropertySuiteOnSmallTrees) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      for (const auto& r : evaluate_all(make_profile(t)))
        if (r.applicable) EXPECT_TRUE(r.holds) << r.name << " n=" << n;
    }
  }
}

TEST(Bounds, EvaluateAllRequiresConnected) {
  const std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(evaluate_all(make_profile(Graph::from_edges(3, e))), Error);
}

TEST(Bounds, NeighborhoodPartition) {
  const auto parts = neighborhood_partition(petersen_graph(), 0);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], std::vector<int>{0});
  EXPECT_EQ(parts[1], (std::vector<int>{1, 4, 5}));
  EXPECT_EQ(parts[2].size(), 6u);
  EXPECT_TRUE(neighborhood_partition(complete_graph(4), 0).empty());
}

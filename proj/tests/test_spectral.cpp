#include <cmath>

#include <gtest/gtest.h>

#include "spectra/error.hpp"
#include "spectra/families.hpp"
#include "spectra/spectral.hpp"
#include "spectra/tree_enum.hpp"
#include "support/oracles.hpp"

using namespace spectra;

TEST(Laplacian, RowSumsVanish) {
  const auto l = laplacian(petersen_graph());
  for (int i = 0; i < 10; ++i) {
    double s = 0;
    for (int j = 0; j < 10; ++j) s += l(i, j);
    EXPECT_EQ(s, 0.0);
    EXPECT_EQ(l(i, i), 3.0);
  }
}

TEST(Spectrum, PathNine) {
  const auto r = spectral_ratio(path_graph(9));
  EXPECT_NEAR(r.mu1, 3.87938524157, 1e-10);
  EXPECT_NEAR(r.alg_conn, 0.120614758428, 1e-11);
  EXPECT_NEAR(r.ratio, 32.1634374775, 1e-9);
  EXPECT_NEAR(path_ratio_closed_form(9), r.ratio, 1e-9);
}

TEST(Spectrum, SmallCases) {
  const auto k2 = spectrum(path_graph(2));
  EXPECT_NEAR(k2.mu[0], 2, 1e-12);
  EXPECT_NEAR(k2.mu[1], 0, 1e-12);
  EXPECT_NEAR(spectral_ratio(star_graph(9)).ratio, 9, 1e-9);
  EXPECT_NEAR(spectral_ratio(complete_graph(6)).ratio, 1, 1e-9);
  EXPECT_NEAR(spectral_ratio(cycle_graph(10)).ratio, 10.472135955, 1e-9);
  EXPECT_NEAR(spectral_ratio(petersen_graph()).ratio, 2.5, 1e-12);
}

TEST(Spectrum, Errors) {
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  const Graph g = Graph::from_edges(4, e);
  EXPECT_FALSE(spectrum(g).connected());
  try {
    spectral_ratio(g);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::Disconnected);
  }
  EXPECT_THROW(spectral_ratio(path_graph(1)), Error);
}

TEST(Quotient, PetersenNeighborhoodPartition) {
  const std::vector<std::vector<int>> partition{{0}, {1, 4, 5}, {2, 3, 6, 7, 8, 9}};
  const auto q = quotient(laplacian(petersen_graph()), partition);
  EXPECT_NEAR(q.at(0, 0), 3, 1e-12);
  EXPECT_NEAR(q.at(0, 1), -3, 1e-12);
  EXPECT_NEAR(q.at(1, 0), -1, 1e-12);
  EXPECT_NEAR(q.at(1, 2), -2, 1e-12);
  EXPECT_NEAR(q.at(2, 1), -1, 1e-12);
  EXPECT_NEAR(q.at(2, 2), 1, 1e-12);
  EXPECT_NEAR(q.eta[0], 5, 1e-10);
  EXPECT_NEAR(q.eta[1], 2, 1e-10);
  EXPECT_NEAR(q.eta[2], 0, 1e-10);
  EXPECT_TRUE(check_interlacing(spectrum(petersen_graph()), q));
}

TEST(Quotient, RejectsBadPartitions) {
  const auto l = laplacian(path_graph(4));
  EXPECT_THROW(quotient(l, {{0, 1}, {1, 2, 3}}), Error);
  EXPECT_THROW(quotient(l, {{0, 1}, {2}}), Error);
  EXPECT_THROW(quotient(l, {{0, 1, 2, 3}, {}}), Error);
}

TEST(Quotient, InterlacingOnRandomPartitions) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = oracle::random_connected_graph(n, 0.3, rng);
    const int k = 1 + trial % n;
    std::vector<std::vector<int>> parts(k);
    const auto perm = oracle::random_permutation(n, rng);
    for (int i = 0; i < n; ++i) parts[i < k ? i : rng() % k].push_back(perm[i]);
    EXPECT_TRUE(check_interlacing(spectrum(g), quotient(laplacian(g), parts)));
  }
}

TEST(Complement, SpectrumMatchesDirectComputation) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 11;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const auto predicted = complement_spectrum(spectrum(g), n);
    const auto direct = spectrum(complement(g));
    for (int i = 0; i < n; ++i) EXPECT_NEAR(predicted.mu[i], direct.mu[i], 1e-9);
  }
}

TEST(Kirchhoff, TreesMatchWienerIndex) {
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      EXPECT_NEAR(kirchhoff_index(spectrum(t)), static_cast<double>(oracle::wiener_index(t)), 1e-7);
    }
  }
  EXPECT_NEAR(kirchhoff_index(spectrum(cycle_graph(10))), 82.5, 1e-9);
  EXPECT_NEAR(kirchhoff_index(spectrum(petersen_graph())), 33, 1e-9);
}

TEST(SpanningTrees, KnownCounts) {
  EXPECT_EQ(spanning_tree_count(petersen_graph()), 2000);
  EXPECT_EQ(spanning_tree_count(cycle_graph(10)), 10);
  for (int n = 2; n <= 12; ++n) {
    mpz_class cayley;
    mpz_ui_pow_ui(cayley.get_mpz_t(), n, n - 2);
    EXPECT_EQ(spanning_tree_count(complete_graph(n)), cayley);
  }
  const std::vector<Edge> e{{0, 1}};
  EXPECT_EQ(spanning_tree_count(Graph::from_edges(3, e)), 0);
}

TEST(SpanningTrees, ProductOfNonzeroEigenvalues) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 10;
    const Graph g = oracle::random_connected_graph(n, 0.4, rng);
    const auto mu = spectrum(g).mu;
    double prod = 1;
    for (int i = 0; i + 1 < n; ++i) prod *= mu[i];
    EXPECT_NEAR(prod / n, spanning_tree_count(g).get_d(), 1e-6 * prod / n);
  }
}

TEST(ClosedForms, PathMinorBinomialMatchesRecurrence) {
  EXPECT_EQ(path_minor_binomial(0), (IntPolynomial{1}));
  EXPECT_EQ(path_minor_binomial(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(path_minor_binomial(2), (IntPolynomial{1, -3, 1}));
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(path_minor_binomial(k), path_minor_recurrence(k)) << k;
}

TEST(ClosedForms, Broom) {
  EXPECT_EQ(broom_charpoly_closed_form(9, 3), laplacian_charpoly(broom_graph(9, 3)));
  EXPECT_EQ(broom_charpoly_closed_form(5, 2), (IntPolynomial{0, 5, -18, 20, -8, 1}));
  EXPECT_THROW(broom_charpoly_closed_form(5, 3), Error);
}

TEST(ClosedForms, TStar) {
  EXPECT_EQ(t_star_charpoly_closed_form(8), laplacian_charpoly(t_star_graph(8)));
  const auto r = spectral_ratio(t_star_graph(8));
  EXPECT_NEAR(r.alg_conn, (3 - std::sqrt(5.0)) / 2, 1e-10);
  EXPECT_NEAR(t_star_ratio_closed_form(8), r.ratio, 1e-9);
  EXPECT_NEAR(t_star_ratio_closed_form(8), 13.7082039325, 1e-9);
}

TEST(ClosedForms, Caterpillar) {
  const auto t35 = caterpillar_ratio_closed_form(3, 5);
  EXPECT_NEAR(t35.mu1, 4.68554393267, 1e-10);
  EXPECT_NEAR(t35.alg_conn, 0.250882452253, 1e-11);
  EXPECT_NEAR(t35.ratio, 18.6762521276, 1e-9);
  for (auto [delta, diam] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 3}, {4, 5}, {5, 6}, {6, 9}}) {
    const auto cf = caterpillar_ratio_closed_form(delta, diam);
    const auto num = spectral_ratio(caterpillar_graph(delta, diam));
    EXPECT_NEAR(cf.mu1, num.mu1, 1e-9);
    EXPECT_NEAR(cf.alg_conn, num.alg_conn, 1e-9);
    EXPECT_NEAR(cf.ratio, num.ratio, 1e-7);
  }
  EXPECT_THROW(caterpillar_ratio_closed_form(2, 5), Error);
  EXPECT_THROW(caterpillar_ratio_closed_form(3, 3), Error);
}

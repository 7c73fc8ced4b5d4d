#pragma once

#include <vector>

#include <gmpxx.h>

#include "spectra/graph.hpp"
#include "spectra/linalg.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

inline constexpr double kEigenTol = 1e-9;
inline constexpr double kRatioTol = 1e-8;

/// L(G) = D(G) - A(G).
SymmetricMatrix laplacian(const Graph& g);

/// Laplacian eigenvalues mu_1 >= ... >= mu_n.
struct Spectrum {
  std::vector<double> mu;

  int order() const noexcept { return static_cast<int>(mu.size()); }
  double mu1() const { return mu.front(); }
  /// mu_{n-1}, the algebraic connectivity.
  double alg_conn() const { return mu.at(mu.size() - 2); }
  bool connected(double tol = kEigenTol) const { return order() == 1 || alg_conn() > tol; }
};

Spectrum spectrum(const Graph& g);

struct RatioResult {
  double mu1 = 0.0;
  double alg_conn = 0.0;
  double ratio = 0.0;
};

/// R_L = mu_1 / mu_{n-1}. Throws Disconnected (or BadParams for n < 2).
RatioResult spectral_ratio(const Spectrum& s);
RatioResult spectral_ratio(const Graph& g);

struct QuotientResult {
  std::vector<std::vector<int>> partition;
  int blocks = 0;
  std::vector<double> b;  // blocks x blocks, row-major
  std::vector<double> eta;  // descending

  double at(int i, int j) const { return b[static_cast<std::size_t>(i) * blocks + j]; }
};

/// Quotient matrix of `m` for the given vertex partition: entry (i, j) is
/// the average row sum of block M_ij. Throws BadPartition.
QuotientResult quotient(const SymmetricMatrix& m, const std::vector<std::vector<int>>& partition);

/// xi_i + tol >= eta_i >= xi_{n-k+i} - tol for every i.
bool check_interlacing(const Spectrum& spec, const QuotientResult& q, double tol = kRatioTol);

/// Laplacian spectrum of the complement: {n - mu_{n-1-i}} and a trailing 0.
Spectrum complement_spectrum(const Spectrum& spec, int n);

/// Kf = n * sum_{i<n} 1/mu_i. Throws Disconnected.
double kirchhoff_index(const Spectrum& spec);

/// Spanning-tree count from an exact Laplacian cofactor.
mpz_class spanning_tree_count(const Graph& g);

/// Exact Laplacian characteristic polynomial det(xI - L(G)).
IntPolynomial laplacian_charpoly(const Graph& g);

/// R_L(P_n) = (1 + cos(pi/n)) / (1 - cos(pi/n)).
double path_ratio_closed_form(int n);

/// Closed-form mu_1, mu_{n-1} and ratio of the caterpillar T_{Delta,D}.
/// Requires Delta >= 3, D >= 3, (Delta-1)(D-1) >= 5; throws BadParams.
RatioResult caterpillar_ratio_closed_form(int max_degree, int diameter);

/// D_k(x) = sum_{i=0}^{k} (-1)^i C(2k-i, i) x^{k-i}.
IntPolynomial path_minor_binomial(int k);

/// D_k via the tridiagonal recurrence D_k = (x-2) D_{k-1} - D_{k-2},
/// D_0 = 1, D_1 = x - 1.
IntPolynomial path_minor_recurrence(int k);

/// Expanded closed-form Laplacian characteristic polynomial of B_n^t:
/// (x-1)^{t-1} (x^2 - (t+2)x + 1) D_{n-t-1} - (x-1)^t D_{n-t-2}.
/// Requires 1 <= t <= n-3; throws BadParams.
IntPolynomial broom_charpoly_closed_form(int n, int t);

/// Factored Laplacian characteristic polynomial of T*:
/// x (x-2) (x^2-3x+1)^{n/2-2} (x^2 - (n/2+2)x + n/2). Requires even n >= 6.
IntPolynomial t_star_charpoly_closed_form(int n);

/// (n + 4 + sqrt(n^2+16)) / (6 - 2 sqrt 5).
double t_star_ratio_closed_form(int n);

}  // namespace spectra

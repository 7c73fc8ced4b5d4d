#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectra/error.hpp"

namespace spectra {

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix l(g.order());
  for (int v = 0; v < g.order(); ++v) l.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) l.set(u, v, -1.0);
  return l;
}

Spectrum spectrum(const Graph& g) { return Spectrum{eigenvalues_symmetric(laplacian(g)).eigenvalues}; }

RatioResult spectral_ratio(const Spectrum& s) {
  if (s.order() < 2) throw Error(ErrorCode::BadParams, "spectral ratio needs n >= 2");
  if (!s.connected()) throw Error(ErrorCode::Disconnected, "algebraic connectivity is zero");
  RatioResult r;
  r.mu1 = s.mu1();
  r.alg_conn = s.alg_conn();
  r.ratio = r.mu1 / r.alg_conn;
  return r;
}

RatioResult spectral_ratio(const Graph& g) { return spectral_ratio(spectrum(g)); }

QuotientResult quotient(const SymmetricMatrix& m, const std::vector<std::vector<int>>& partition) {
  const int n = m.order();
  const int k = static_cast<int>(partition.size());
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < k; ++i) {
    if (partition[i].empty()) throw Error(ErrorCode::BadPartition, "empty block");
    for (int v : partition[i]) {
      if (v < 0 || v >= n) throw Error(ErrorCode::BadPartition, "vertex out of range");
      if (block_of[v] != -1) throw Error(ErrorCode::BadPartition, "vertex in two blocks");
      block_of[v] = i;
    }
  }
  if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end()) {
    throw Error(ErrorCode::BadPartition, "blocks do not cover all vertices");
  }

  QuotientResult q;
  q.partition = partition;
  q.blocks = k;
  q.b.assign(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) {
    for (int row : partition[i]) {
      for (int col = 0; col < n; ++col) q.b[static_cast<std::size_t>(i) * k + block_of[col]] += m(row, col);
    }
    for (int j = 0; j < k; ++j) q.b[static_cast<std::size_t>(i) * k + j] /= static_cast<double>(partition[i].size());
  }

  // S = D^{1/2} B D^{-1/2} with D = diag(n_i) is symmetric because n_i b_ij = n_j b_ji.
  SymmetricMatrix sym(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double ni = static_cast<double>(partition[i].size());
      const double nj = static_cast<double>(partition[j].size());
      sym.set(i, j, std::sqrt(ni / nj) * q.at(i, j));
    }
  }
  q.eta = eigenvalues_symmetric(sym).eigenvalues;
  return q;
}

bool check_interlacing(const Spectrum& spec, const QuotientResult& q, double tol) {
  const int n = spec.order();
  const int k = q.blocks;
  if (k > n || static_cast<int>(q.eta.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (q.eta[i] > spec.mu[i] + tol) return false;
    if (q.eta[i] < spec.mu[n - k + i] - tol) return false;
  }
  return true;
}

Spectrum complement_spectrum(const Spectrum& spec, int n) {
  Spectrum out;
  const int len = spec.order();
  // mu has n entries with mu_n = 0 dropped; n - mu_{n-1} >= ... >= n - mu_1.
  for (int i = len - 2; i >= 0; --i) out.mu.push_back(n - spec.mu[i]);
  out.mu.push_back(0.0);
  std::sort(out.mu.begin(), out.mu.end(), std::greater<>());
  return out;
}

double kirchhoff_index(const Spectrum& spec) {
  if (!spec.connected()) throw Error(ErrorCode::Disconnected, "Kirchhoff index needs a connected graph");
  double sum = 0.0;
  for (int i = 0; i + 1 < spec.order(); ++i) sum += 1.0 / spec.mu[i];
  return spec.order() * sum;
}

mpz_class spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 1;
  IntMatrix cofactor(n - 1);
  for (int v = 1; v < n; ++v) {
    cofactor(v - 1, v - 1) = g.degree(v);
    for (int w : g.neighbors(v))
      if (w > 0) cofactor(v - 1, w - 1) = -1;
  }
  return bareiss_determinant(std::move(cofactor));
}

IntPolynomial laplacian_charpoly(const Graph& g) { return char_poly_exact(laplacian(g)); }

double path_ratio_closed_form(int n) {
  if (n < 2) throw Error(ErrorCode::BadParams, "path ratio needs n >= 2");
  const double c = std::cos(std::numbers::pi / n);
  return (1.0 + c) / (1.0 - c);
}

RatioResult caterpillar_ratio_closed_form(int max_degree, int diameter) {
  if (max_degree < 3 || diameter < 3 || (max_degree - 1) * (diameter - 1) < 5) {
    throw Error(ErrorCode::BadParams, "caterpillar closed form needs Delta >= 3, D >= 3, n >= 5");
  }
  const double d = max_degree;
  const double c = 2.0 * std::cos(std::numbers::pi / (diameter - 1));
  RatioResult r;
  r.mu1 = (d + 1.0 + c + std::sqrt((d - 1.0 + c) * (d - 1.0 + c) + 4.0 * (d - 2.0))) / 2.0;
  r.alg_conn = (d + 1.0 - c - std::sqrt((d - 1.0 - c) * (d - 1.0 - c) + 4.0 * (d - 2.0))) / 2.0;
  r.ratio = r.mu1 / r.alg_conn;
  return r;
}

IntPolynomial path_minor_binomial(int k) {
  if (k < 0) throw Error(ErrorCode::BadParams, "negative minor size");
  std::vector<mpz_class> c(k + 1);
  for (int i = 0; i <= k; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * k - i), static_cast<unsigned long>(i));
    c[k - i] = (i % 2 == 0) ? binom : mpz_class(-binom);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial path_minor_recurrence(int k) {
  if (k < 0) throw Error(ErrorCode::BadParams, "negative minor size");
  IntPolynomial prev{1};
  if (k == 0) return prev;
  IntPolynomial cur{-1, 1};
  const IntPolynomial diag{-2, 1};
  for (int j = 2; j <= k; ++j) {
    IntPolynomial next = diag * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial broom_charpoly_closed_form(int n, int t) {
  if (t < 1 || t > n - 3) throw Error(ErrorCode::BadParams, "broom closed form needs 1 <= t <= n-3");
  const IntPolynomial x_minus_1{-1, 1};
  const IntPolynomial quad{1, -(t + 2), 1};
  return x_minus_1.pow(t - 1) * quad * path_minor_binomial(n - t - 1) -
         x_minus_1.pow(t) * path_minor_binomial(n - t - 2);
}

IntPolynomial t_star_charpoly_closed_form(int n) {
  if (n < 6 || n % 2 != 0) throw Error(ErrorCode::BadParams, "T* needs even n >= 6");
  const long half = n / 2;
  return IntPolynomial{0, 1} * IntPolynomial{-2, 1} * IntPolynomial{1, -3, 1}.pow(n / 2 - 2) *
         IntPolynomial{half, -(half + 2), 1};
}

double t_star_ratio_closed_form(int n) {
  const double dn = n;
  return (dn + 4.0 + std::sqrt(dn * dn + 16.0)) / (6.0 - 2.0 * std::sqrt(5.0));
}

}  // namespace spectra

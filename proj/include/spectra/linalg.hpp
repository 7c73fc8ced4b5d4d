#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace spectra {

/// Real symmetric matrix with a single stored (lower) triangle, so
/// entry(i, j) == entry(j, i) holds by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {}

  static SymmetricMatrix identity(int n);
  static SymmetricMatrix diagonal(const std::vector<double>& d);

  int order() const noexcept { return n_; }

  double operator()(int i, int j) const noexcept { return data_[index(i, j)]; }
  void set(int i, int j, double value) noexcept { data_[index(i, j)] = value; }
  void add(int i, int j, double value) noexcept { data_[index(i, j)] += value; }

  /// M + alpha * J.
  SymmetricMatrix shifted_by_ones(double alpha) const;

  double trace() const;
  double trace_of_square() const;
  double frobenius_norm() const;
  bool is_integral() const;

 private:
  static std::size_t index(int i, int j) noexcept {
    if (i < j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
  }

  int n_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  double residual = 0.0;            // max_k |M v_k - lambda_k v_k|_inf
  int sweeps = 0;
};

inline constexpr int kJacobiMaxSweeps = 30;
inline constexpr double kJacobiOffDiagonalRelTol = 1e-12;

/// Cyclic Jacobi eigensolver. Throws NoConvergence after kJacobiMaxSweeps.
EigenDecomposition eigenvalues_symmetric(const SymmetricMatrix& m);

struct TraceStats {
  double r = 0.0;  // tr(M)/n
  double s = 0.0;  // sqrt(tr(M^2)/n - r^2)
};

TraceStats trace_stats(const SymmetricMatrix& m);

/// Builds trace statistics from tr(M) and tr(M^2) directly; negative
/// round-off in the variance is clamped to zero.
TraceStats trace_stats_from_traces(double trace, double trace_sq, int n);

/// Lower bound on lambda_max/lambda_min of an n x n positive definite
/// matrix from its trace statistics (separate even/odd forms).
/// Throws DomainError when r - s/sqrt(n-1) <= 0.
double ws_lower_ratio(const TraceStats& stats, int n);

/// Upper bound on lambda_max/lambda_min using trace statistics and det M.
/// Throws DomainError when det <= 0.
double ws_upper_ratio(const TraceStats& stats, double det, int n);

/// Dense square integer matrix (row-major) for exact computations.
struct IntMatrix {
  int n = 0;
  std::vector<mpz_class> a;

  explicit IntMatrix(int order = 0) : n(order), a(static_cast<std::size_t>(order) * order) {}
  mpz_class& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const mpz_class& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  /// Throws DomainError when an entry of `m` is not an integer.
  static IntMatrix from_symmetric(const SymmetricMatrix& m);
};

/// Exact determinant via fraction-free (Bareiss) elimination.
mpz_class bareiss_determinant(IntMatrix m);

}  // namespace spectra

#include "spectra/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

SymmetricMatrix SymmetricMatrix::identity(int n) {
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
  SymmetricMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.order(); ++i) m.set(i, i, d[i]);
  return m;
}

SymmetricMatrix SymmetricMatrix::shifted_by_ones(double alpha) const {
  SymmetricMatrix out = *this;
  for (double& x : out.data_) x += alpha;
  return out;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::trace_of_square() const {
  // tr(M^2) = sum_ij m_ij^2 for symmetric M
  double t = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) {
      double v = (*this)(i, j);
      t += (i == j ? 1.0 : 2.0) * v * v;
    }
  }
  return t;
}

double SymmetricMatrix::frobenius_norm() const { return std::sqrt(trace_of_square()); }

bool SymmetricMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double x) { return std::isfinite(x) && x == std::nearbyint(x); });
}

EigenDecomposition eigenvalues_symmetric(const SymmetricMatrix& m) {
  const int n = m.order();
  EigenDecomposition out;
  if (n == 0) return out;

  std::vector<double> a(static_cast<std::size_t>(n) * n);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j))) throw Error(ErrorCode::DomainError, "non-finite matrix entry");
      A(i, j) = m(i, j);
    }
    V(i, i) = 1.0;
  }

  const double threshold = kJacobiOffDiagonalRelTol * m.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (sweep == kJacobiMaxSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  out.sweeps = sweep;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) > A(y, y); });

  out.eigenvalues.reserve(n);
  for (int k : order) {
    const double lambda = A(k, k);
    out.eigenvalues.push_back(lambda);
    for (int i = 0; i < n; ++i) {
      double mv = 0.0;
      for (int j = 0; j < n; ++j) mv += m(i, j) * V(j, k);
      out.residual = std::max(out.residual, std::abs(mv - lambda * V(i, k)));
    }
  }
  return out;
}

TraceStats trace_stats_from_traces(double trace, double trace_sq, int n) {
  TraceStats st;
  st.r = trace / n;
  const double var = trace_sq / n - st.r * st.r;
  st.s = var > 0.0 ? std::sqrt(var) : 0.0;
  return st;
}

TraceStats trace_stats(const SymmetricMatrix& m) {
  return trace_stats_from_traces(m.trace(), m.trace_of_square(), m.order());
}

double ws_lower_ratio(const TraceStats& stats, int n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "ratio bound needs n >= 2");
  if (stats.s < 0.0) throw Error(ErrorCode::DomainError, "negative spread s");
  const double denom = stats.r - stats.s / std::sqrt(n - 1.0);
  if (!(denom > 0.0)) throw Error(ErrorCode::DomainError, "r - s/sqrt(n-1) <= 0");
  if (n % 2 == 0) return 1.0 + 2.0 * stats.s / denom;
  const double dn = n;
  return 1.0 + (2.0 * stats.s * dn / std::sqrt(dn * dn - 1.0)) / denom;
}

double ws_upper_ratio(const TraceStats& stats, double det, int n) {
  if (n < 2) throw Error(ErrorCode::DomainError, "ratio bound needs n >= 2");
  if (!(det > 0.0)) throw Error(ErrorCode::DomainError, "det M <= 0");
  const double base = stats.r + stats.s / std::sqrt(n - 1.0);
  return 1.0 + stats.s * std::sqrt(2.0 * n) * std::pow(base, n - 1) / det;
}

IntMatrix IntMatrix::from_symmetric(const SymmetricMatrix& m) {
  if (!m.is_integral()) throw Error(ErrorCode::DomainError, "matrix has non-integer entries");
  IntMatrix out(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) out(i, j) = static_cast<long>(m(i, j));
  return out;
}

mpz_class bareiss_determinant(IntMatrix m) {
  const int n = m.n;
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace spectra

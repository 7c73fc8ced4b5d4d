#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spectra/linalg.hpp"

namespace spectra {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients in ascending degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> ascending);
  explicit IntPolynomial(std::vector<mpz_class> ascending);

  static IntPolynomial monomial(const mpz_class& c, int degree);
  /// x - root
  static IntPolynomial linear_root(long root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  mpz_class coeff(int k) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  IntPolynomial pow(int e) const;
  IntPolynomial derivative() const;

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;

  /// Human-readable form, e.g. "x^3 - 4x^2 + 3x".
  std::string to_string(char var = 'x') const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Exact det(xI - M) by the Faddeev-LeVerrier recursion; every division
/// in the recursion is exact over the integers.
IntPolynomial char_poly_exact(const IntMatrix& m);
IntPolynomial char_poly_exact(const SymmetricMatrix& m);

/// Squarefree decomposition: factors[k] is the product of the irreducible
/// factors of multiplicity k+1 (primitive, positive leading coefficient).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// All real roots with multiplicity, ascending. Roots are isolated by Sturm
/// sequences inside the Cauchy bound and refined by exact-sign bisection
/// to an interval width below `tol`.
std::vector<double> real_roots(const IntPolynomial& p, double tol = 1e-12);

}  // namespace spectra

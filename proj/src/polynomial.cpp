#include "spectra/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_root(long root) { return IntPolynomial{-root, 1}; }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial result{1};
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& k, const IntPolynomial& p) {
  std::vector<mpz_class> c = p.coeffs_;
  for (auto& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly_exact(const IntMatrix& a) {
  const int n = a.n;
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n);  // M_0 = 0
  IntMatrix prod(n);
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (int l = 0; l < n; ++l) s += a(i, l) * mk(l, j);
        prod(i, j) = s;
      }
      prod(i, i) += c[n - k + 1];
    }
    std::swap(mk, prod);
    // c_{n-k} = -tr(A M_k) / k
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += a(i, l) * mk(l, i);
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw Error(ErrorCode::DomainError, "Faddeev-LeVerrier: inexact division");
    }
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly_exact(const SymmetricMatrix& m) { return char_poly_exact(IntMatrix::from_symmetric(m)); }

namespace {

// Polynomials over Q, ascending, trimmed.
using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * mpq_class(static_cast<unsigned long>(k)));
  trim(d);
  return d;
}

RatPoly subtract(const RatPoly& a, const RatPoly& b) {
  RatPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// a = q*b + r
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  q.clear();
  if (b.empty()) throw Error(ErrorCode::DomainError, "polynomial division by zero");
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    mpq_class factor = r.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

RatPoly make_monic(RatPoly p) {
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  divmod(a, b, q, r);
  if (!r.empty()) throw Error(ErrorCode::DomainError, "inexact polynomial division");
  return q;
}

IntPolynomial to_primitive(const RatPoly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : p) {
    mpq_class scaled = c * mpq_class(lcm);
    ints.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (content != 0) {
    if (ints.back() < 0) content = -content;
    for (auto& x : ints) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  return IntPolynomial(std::move(ints));
}

mpq_class eval(const RatPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sgn(const mpq_class& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct SturmChain {
  std::vector<RatPoly> polys;

  explicit SturmChain(const RatPoly& p) {
    polys.push_back(p);
    polys.push_back(derivative(p));
    while (!polys.back().empty()) {
      RatPoly q, r;
      divmod(polys[polys.size() - 2], polys.back(), q, r);
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      polys.push_back(std::move(r));
    }
    if (polys.back().empty()) polys.pop_back();
  }

  int sign_changes(const mpq_class& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : polys) {
      int s = sgn(eval(p, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }
};

void isolate(const SturmChain& chain, const mpq_class& lo, const mpq_class& hi, int v_lo, int v_hi,
             const mpq_class& tol, std::vector<double>& roots) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  const RatPoly& p = chain.polys.front();
  if (count == 1) {
    // exactly one root in (lo, hi]
    if (sgn(eval(p, hi)) == 0) {
      roots.push_back(hi.get_d());
      return;
    }
    mpq_class a = lo, b = hi;
    const int sb = sgn(eval(p, b));
    while (b - a > tol) {
      mpq_class mid = (a + b) / 2;
      int sm = sgn(eval(p, mid));
      if (sm == 0) {
        roots.push_back(mid.get_d());
        return;
      }
      if (sm == sb) b = mid; else a = mid;
    }
    roots.push_back(mpq_class((a + b) / 2).get_d());
    return;
  }
  mpq_class mid = (lo + hi) / 2;
  const int v_mid = chain.sign_changes(mid);
  isolate(chain, lo, mid, v_lo, v_mid, tol, roots);
  isolate(chain, mid, hi, v_mid, v_hi, tol, roots);
}

}  // namespace

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<IntPolynomial> out;
  RatPoly f = to_rat(p);
  RatPoly fp = derivative(f);
  RatPoly a0 = gcd(f, fp);
  RatPoly b = exact_div(f, a0);
  RatPoly c = exact_div(fp, a0);
  RatPoly d = subtract(c, derivative(b));
  while (b.size() > 1) {
    RatPoly a = gcd(b, d);
    out.push_back(to_primitive(a));
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = subtract(c, derivative(b));
  }
  return out;
}

std::vector<double> real_roots(const IntPolynomial& p, double tol) {
  std::vector<double> roots;
  const auto factors = squarefree_decomposition(p);
  const mpq_class qtol(tol);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const IntPolynomial& f = factors[k];
    if (f.degree() < 1) continue;
    // Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_d|.
    mpq_class bound = 0;
    for (int i = 0; i < f.degree(); ++i) {
      mpq_class ratio(abs(f.coeff(i)), abs(f.leading()));
      if (ratio > bound) bound = ratio;
    }
    bound += 1;
    SturmChain chain(to_rat(f));
    std::vector<double> found;
    isolate(chain, -bound, bound, chain.sign_changes(-bound), chain.sign_changes(bound), qtol, found);
    for (double r : found) roots.insert(roots.end(), k + 1, r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace spectra

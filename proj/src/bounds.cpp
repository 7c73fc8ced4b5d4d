#include "spectra/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectra/error.hpp"

namespace spectra {

namespace {

constexpr double kPi = std::numbers::pi;

BoundReport lower(std::string name, std::string target, double value, double observed, double tol) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = BoundKind::Lower;
  r.target = std::move(target);
  r.value = value;
  r.observed = observed;
  r.applicable = true;
  r.slack = observed - value;
  r.holds = r.slack >= -tol;
  return r;
}

BoundReport upper(std::string name, std::string target, double value, double observed, double tol) {
  BoundReport r = lower(std::move(name), std::move(target), value, observed, tol);
  r.kind = BoundKind::Upper;
  r.slack = value - observed;
  r.holds = r.slack >= -tol;
  return r;
}

BoundReport skipped(std::string name, BoundKind kind, std::string target, Reason reason) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = kind;
  r.target = std::move(target);
  r.applicable = false;
  r.holds = false;
  r.reason = reason;
  return r;
}

// Strict conclusions ("x > y") need a margin above tol; non-strict ones
// ("x >= y") tolerate -tol.
struct Conclusion {
  bool strict;
  double margin;  // positive when the conclusion's inequality is satisfied

  bool truth(double tol) const { return strict ? margin > tol : margin >= -tol; }
};

BoundReport implication(std::string name, std::string target, double threshold, double observed,
                        bool hypothesis, double hypothesis_failure_margin, Conclusion conclusion, double tol) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = BoundKind::Implication;
  r.target = std::move(target);
  r.value = threshold;
  r.observed = observed;
  r.applicable = true;
  r.hypothesis = hypothesis;
  r.conclusion = conclusion.truth(tol);
  r.holds = !r.hypothesis || r.conclusion;
  r.slack = hypothesis ? conclusion.margin : hypothesis_failure_margin;
  return r;
}

bool is_star(const GraphMetrics& m) { return m.is_tree() && m.max_degree == m.n - 1; }

void check_shift(const AlphaShift& shift) {
  if (!shift.valid) throw Error(ErrorCode::InvalidShift, "n*alpha outside [mu_{n-1}, mu_1]");
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::Implication: return "implication";
  }
  return "unknown";
}

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::None: return "";
    case Reason::NotApplicable: return "NotApplicable";
    case Reason::IsComplete: return "IsComplete";
    case Reason::NotBipartite: return "NotBipartite";
    case Reason::NotRegular: return "NotRegular";
    case Reason::HasTriangle: return "HasTriangle";
    case Reason::NotATree: return "NotATree";
    case Reason::IsStar: return "IsStar";
    case Reason::TooSmall: return "TooSmall";
    case Reason::ComplementDisconnected: return "ComplementDisconnected";
    case Reason::NegativeRadicand: return "NegativeRadicand";
    case Reason::TriviallySatisfied: return "TriviallySatisfied";
  }
  return "unknown";
}

double GraphProfile::rl() const {
  if (!ratio) throw Error(ErrorCode::Disconnected, "spectral ratio undefined");
  return ratio->ratio;
}

GraphProfile make_profile(const Graph& g) {
  GraphProfile p;
  p.graph = g;
  p.metrics = metrics(g);
  p.spectrum = spectrum(g);
  if (g.order() >= 2 && p.spectrum.connected()) p.ratio = spectral_ratio(p.spectrum);
  return p;
}

AlphaShift make_shift(const Spectrum& spec, double alpha) {
  const double n_alpha = spec.order() * alpha;
  return AlphaShift{alpha, spec.order() >= 2 && n_alpha >= spec.alg_conn() - kEigenTol &&
                               n_alpha <= spec.mu1() + kEigenTol};
}

AlphaShift default_shift(const Spectrum& spec) {
  return make_shift(spec, (spec.mu1() + spec.alg_conn()) / (2.0 * spec.order()));
}

BoundReport goldberg_lower(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  if (m.is_complete()) return skipped("goldberg", BoundKind::Lower, "R_L", Reason::IsComplete);
  const double rl = p.rl();
  return lower("goldberg", "R_L", (m.max_degree + 1.0) / m.min_degree, rl, tol);
}

BoundReport haemers_diameter_upper(const GraphProfile& p, double tol) {
  const double rl = p.rl();
  if (p.metrics.is_complete() || rl <= 1.0 + tol) {
    return skipped("haemers_diameter", BoundKind::Upper, "diameter", Reason::TriviallySatisfied);
  }
  const int n = p.metrics.n;
  const double root = std::sqrt(rl);
  const double value = 1.0 + std::log(2.0 * (n - 1)) / (std::log(root + 1.0) - std::log(root - 1.0));
  BoundReport r = upper("haemers_diameter", "diameter", value, p.metrics.diameter, tol);
  r.holds = r.slack > 0.0;  // strict: D < value
  return r;
}

BoundReport cut_density_check(const GraphProfile& p, const std::vector<int>& x, const std::vector<int>& y,
                              double tol) {
  const int n = p.metrics.n;
  if (x.empty() || y.empty()) throw Error(ErrorCode::BadSets, "X and Y must be nonempty");
  std::vector<char> in_x(n, 0);
  for (int v : x) {
    if (v < 0 || v >= n) throw Error(ErrorCode::BadSets, "vertex out of range");
    in_x[v] = 1;
  }
  for (int v : y) {
    if (v < 0 || v >= n) throw Error(ErrorCode::BadSets, "vertex out of range");
    if (in_x[v]) throw Error(ErrorCode::BadSets, "X and Y intersect");
    for (int w : p.graph.neighbors(v))
      if (in_x[w]) throw Error(ErrorCode::BadSets, "edge between X and Y");
  }
  const double sx = static_cast<double>(std::count(in_x.begin(), in_x.end(), 1));
  const double sy = static_cast<double>(y.size());
  const double rl = p.rl();
  const double lhs = sx * sy / ((n - sx) * (n - sy));
  const double q = (rl - 1.0) / (rl + 1.0);
  return upper("cut_density", "cut_density", q * q, lhs, tol);
}

BoundReport kantorovich_kirchhoff_upper(const GraphProfile& p, double tol) {
  const double rl = p.rl();
  const double n = p.metrics.n;
  const double m = p.metrics.m;
  const double value = n * (n - 1.0) * (n - 1.0) / (8.0 * m) * (rl + 1.0 / rl + 2.0);
  return upper("kantorovich_kirchhoff", "kirchhoff_index", value, kirchhoff_index(p.spectrum), tol);
}

double shift_omega(int n, int m, double z1, double alpha) {
  const double dn = n, dm = m;
  return dn * dn * (dn - 1.0) * alpha * alpha - 4.0 * dm * dn * alpha + dn * z1 + 2.0 * dm * dn - 4.0 * dm * dm;
}

double th31_display_value(int n, int m, double z1, double alpha) {
  const double omega = std::max(0.0, shift_omega(n, m, z1, alpha));
  const double dn = n;
  const double trace = 2.0 * m + dn * alpha;
  if (n % 2 == 0) {
    return 1.0 + 2.0 * std::sqrt((dn - 1.0) * omega) / (trace * std::sqrt(dn - 1.0) - std::sqrt(omega));
  }
  return 1.0 + 2.0 * dn * std::sqrt(omega) / (trace * std::sqrt(dn * dn - 1.0) - std::sqrt((dn + 1.0) * omega));
}

double cor31_display_value(int n, int m, double z1) {
  const double dn = n, dm = m;
  const double k = (dn - 1.0) * z1 * z1 - 4.0 * dm * dm * z1 + dn * dm * dm * z1 + 2.0 * dn * dm * dm * dm -
                   4.0 * dm * dm * dm * dm;
  const double lead = 2.0 * dm * dm + z1;
  if (n % 2 == 0) {
    return 1.0 + 2.0 * std::sqrt((dn - 1.0) * k) / (lead * std::sqrt(dn - 1.0) - std::sqrt(k));
  }
  return 1.0 + 2.0 * dn * std::sqrt(k) / (lead * std::sqrt(dn * dn - 1.0) - std::sqrt((dn + 1.0) * k));
}

double th33_display_value(int n, int m, double z1, double alpha, double tau) {
  const double omega = std::max(0.0, shift_omega(n, m, z1, alpha));
  const double dn = n;
  return 1.0 + std::sqrt(2.0 * omega) * std::pow(2.0 * m + dn * alpha + std::sqrt(omega / (dn - 1.0)), n - 1) /
                   (std::pow(dn, dn + 1.5) * alpha * tau);
}

namespace {

TraceStats shifted_laplacian_stats(const GraphMetrics& m, double alpha) {
  const double n = m.n;
  // tr(L + aJ) = 2m + na, tr((L + aJ)^2) = Z1 + 2m + n^2 a^2
  return trace_stats_from_traces(2.0 * m.m + n * alpha,
                                 static_cast<double>(m.zagreb_z1) + 2.0 * m.m + n * n * alpha * alpha, m.n);
}

}  // namespace

BoundReport th31_lower(const GraphProfile& p, const AlphaShift& shift, double tol) {
  check_shift(shift);
  const double rl = p.rl();
  const double value = ws_lower_ratio(shifted_laplacian_stats(p.metrics, shift.alpha), p.metrics.n);
  return lower("th31_shifted_trace", "R_L", value, rl, tol);
}

BoundReport cor31_bipartite_lower(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  if (!m.is_bipartite) return skipped("cor31_bipartite", BoundKind::Lower, "R_L", Reason::NotBipartite);
  if (m.n <= 2) return skipped("cor31_bipartite", BoundKind::Lower, "R_L", Reason::TooSmall);
  p.rl();
  const double alpha = static_cast<double>(m.zagreb_z1) / (static_cast<double>(m.m) * m.n);
  BoundReport r = th31_lower(p, make_shift(p.spectrum, alpha), tol);
  r.name = "cor31_bipartite";
  return r;
}

BoundReport th33_upper(const GraphProfile& p, const AlphaShift& shift, double tol) {
  check_shift(shift);
  if (!(shift.alpha > 0.0)) throw Error(ErrorCode::InvalidShift, "alpha must be positive");
  const double rl = p.rl();
  const double n = p.metrics.n;
  const double tau = spanning_tree_count(p.graph).get_d();
  const double det = n * n * shift.alpha * tau;  // det(L + aJ) = n a prod mu_i = n^2 a tau
  const double value = ws_upper_ratio(shifted_laplacian_stats(p.metrics, shift.alpha), det, p.metrics.n);
  return upper("th33_shifted_trace", "R_L", value, rl, tol);
}

BoundReport th32_regular_trianglefree_lower(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "th32_regular_triangle_free";
  if (!m.is_regular) return skipped(name, BoundKind::Lower, "R_L", Reason::NotRegular);
  if (!m.is_triangle_free) return skipped(name, BoundKind::Lower, "R_L", Reason::HasTriangle);
  const double k = *m.regularity_k;
  const double n = m.n;
  if (m.n <= *m.regularity_k + 1) return skipped(name, BoundKind::Lower, "R_L", Reason::IsComplete);
  const double rl = p.rl();
  const double b = 2.0 * k * n - k * k - 3.0 * k;
  const double disc = 4.0 * k * n * n - 4.0 * k * (3.0 * k + 1.0) * n + k * k * k * k + 6.0 * k * k * k + 9.0 * k * k;
  if (disc < 0.0) return skipped(name, BoundKind::Lower, "R_L", Reason::NegativeRadicand);
  const double root = std::sqrt(disc);
  return lower(name, "R_L", (b + root) / (b - root), rl, tol);
}

BoundReport youliu_regular_lower(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  if (!m.is_regular) return skipped("youliu_regular", BoundKind::Lower, "R_L", Reason::NotRegular);
  const double rl = p.rl();
  const double k = *m.regularity_k;
  const double n = m.n;
  const double x = (n - 1.0) * (k + 1.0) / (n * k);
  // x = 1 exactly for complete graphs; clamp round-off below zero.
  const double inner = x - 1.0;
  if (inner < -1e-12) return skipped("youliu_regular", BoundKind::Lower, "R_L", Reason::NegativeRadicand);
  const double s = std::sqrt(x) + std::sqrt(std::max(0.0, inner));
  return lower("youliu_regular", "R_L", s * s, rl, tol);
}

double complement_sum_function(double x, double y, int n) { return x / y + (n - y) / (n - x); }

BoundReport th34_complement_sum_lower(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "th34_complement_sum";
  p.rl();
  if (m.max_degree > m.n - 2) return skipped(name, BoundKind::Lower, "R_L(G)+R_L(co-G)", Reason::ComplementDisconnected);
  GraphProfile co = make_profile(complement(p.graph));
  if (!co.ratio) return skipped(name, BoundKind::Lower, "R_L(G)+R_L(co-G)", Reason::ComplementDisconnected);
  const double value = complement_sum_function(m.max_degree + 1.0, m.min_degree, m.n);
  return lower(name, "R_L(G)+R_L(co-G)", value, p.rl() + co.rl(), tol);
}

// ---- tree conditions ------------------------------------------------------

BoundReport th11_youliu_condition(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "th11_youliu_condition";
  if (!m.is_tree()) return skipped(name, BoundKind::Implication, "max(Delta,D)", Reason::NotATree);
  if (m.n < 10) return skipped(name, BoundKind::Implication, "max(Delta,D)", Reason::TooSmall);
  if (is_star(m)) return skipped(name, BoundKind::Implication, "max(Delta,D)", Reason::IsStar);
  const int threshold = (m.n + 1) / 2 - 1;
  const int observed = std::max(m.max_degree, m.diameter);
  const bool hyp = observed >= threshold;
  return implication(name, "max(Delta,D)", threshold, observed, hyp, threshold - observed,
                     {true, p.rl() - m.n}, tol);
}

BoundReport th41_condition(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "th41_diameter_condition";
  if (!m.is_tree()) return skipped(name, BoundKind::Implication, "diameter", Reason::NotATree);
  if (is_star(m)) return skipped(name, BoundKind::Implication, "diameter", Reason::IsStar);
  const double n = m.n;
  const double threshold = kPi * std::sqrt(n / 4.0 + 3.0 / (16.0 * n - 24.0) + 1.0 / 8.0) - 1.0;
  const bool hyp = m.diameter >= threshold;
  return implication(name, "diameter", threshold, m.diameter, hyp, threshold - m.diameter,
                     {true, p.rl() - n}, tol);
}

BoundReport th42_condition(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "th42_max_degree_condition";
  if (!m.is_tree()) return skipped(name, BoundKind::Implication, "max_degree", Reason::NotATree);
  if (m.n < 6) return skipped(name, BoundKind::Implication, "max_degree", Reason::TooSmall);
  if (is_star(m)) return skipped(name, BoundKind::Implication, "max_degree", Reason::IsStar);
  const double n = m.n;
  const double threshold = std::sqrt(n * (n - 3.0) / (2.0 * m.max_degree_count) + 1.0);
  const bool hyp = m.max_degree >= threshold;
  return implication(name, "max_degree", threshold, m.max_degree, hyp, threshold - m.max_degree,
                     {true, p.rl() - n}, tol);
}

BoundReport th43_condition(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "th43_eccentricity_condition";
  if (!m.is_tree()) return skipped(name, BoundKind::Implication, "|ecc>=3 set|", Reason::NotATree);
  if (m.n < 6) return skipped(name, BoundKind::Implication, "|ecc>=3 set|", Reason::TooSmall);
  const int threshold = m.n - 1;
  const bool hyp = m.eccentricity_set_size <= threshold;
  return implication(name, "|ecc>=3 set|", threshold, m.eccentricity_set_size, hyp,
                     m.eccentricity_set_size - threshold, {true, path_ratio_closed_form(m.n) - p.rl()}, tol);
}

BoundReport cor41_condition(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "cor41_small_diameter";
  if (!m.is_tree()) return skipped(name, BoundKind::Implication, "diameter", Reason::NotATree);
  if (m.n < 6) return skipped(name, BoundKind::Implication, "diameter", Reason::TooSmall);
  const bool hyp = m.diameter <= 4;
  return implication(name, "diameter", 4.0, m.diameter, hyp, m.diameter - 4.0,
                     {true, path_ratio_closed_form(m.n) - p.rl()}, tol);
}

BoundReport th44_condition(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "th44_degree_diameter_condition";
  if (!m.is_tree()) return skipped(name, BoundKind::Implication, "Delta+2sqrt(Delta+1)", Reason::NotATree);
  if (m.n < 6) return skipped(name, BoundKind::Implication, "Delta+2sqrt(Delta+1)", Reason::TooSmall);
  const double delta = m.max_degree;
  const double observed = delta + 2.0 * std::sqrt(delta + 1.0);
  const double threshold = 1600.0 * m.n / (121.0 * m.diameter * kPi * kPi);
  const bool hyp = observed <= threshold;
  return implication(name, "Delta+2sqrt(Delta+1)", threshold, observed, hyp, observed - threshold,
                     {true, path_ratio_closed_form(m.n) - p.rl()}, tol);
}

BoundReport tree_mu1_upper(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  if (!m.is_tree()) return skipped("tree_mu1_degree", BoundKind::Upper, "mu1", Reason::NotATree);
  const double delta = m.max_degree;
  BoundReport r = upper("tree_mu1_degree", "mu1", delta + 2.0 * std::sqrt(delta + 1.0), p.spectrum.mu1(), tol);
  r.holds = r.slack > 0.0;  // strict
  return r;
}

BoundReport tree_alg_conn_diameter_lower(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  if (!m.is_tree()) return skipped("tree_alg_conn_diameter", BoundKind::Lower, "alg_conn", Reason::NotATree);
  if (m.n < 2) return skipped("tree_alg_conn_diameter", BoundKind::Lower, "alg_conn", Reason::TooSmall);
  return lower("tree_alg_conn_diameter", "alg_conn", 4.0 / (m.n * static_cast<double>(m.diameter)),
               p.spectrum.alg_conn(), tol);
}

BoundReport barrett_alg_conn_lower(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  const char* name = "barrett_alg_conn";
  if (!m.is_tree()) return skipped(name, BoundKind::Lower, "alg_conn", Reason::NotATree);
  if (m.n < 2) return skipped(name, BoundKind::Lower, "alg_conn", Reason::TooSmall);
  const double n = m.n;
  const double s = m.eccentricity_set_size / 2.0;
  const double a = n - s + 1.0;
  const double disc = a * a - 4.0 * (n - 2.0 * s);
  if (disc < 0.0) return skipped(name, BoundKind::Lower, "alg_conn", Reason::NegativeRadicand);
  return lower(name, "alg_conn", (a - std::sqrt(disc)) / 2.0, p.spectrum.alg_conn(), tol);
}

// ---- lemma invariants -----------------------------------------------------

BoundReport lemma_mu1_degree_lower(const GraphProfile& p, double tol) {
  if (p.metrics.m < 1) return skipped("lemma_mu1_degree", BoundKind::Lower, "mu1", Reason::NotApplicable);
  return lower("lemma_mu1_degree", "mu1", p.metrics.max_degree + 1.0, p.spectrum.mu1(), tol);
}

BoundReport lemma_mu1_order_upper(const GraphProfile& p, double tol) {
  if (p.metrics.m < 1) return skipped("lemma_mu1_order", BoundKind::Upper, "mu1", Reason::NotApplicable);
  return upper("lemma_mu1_order", "mu1", p.metrics.n, p.spectrum.mu1(), tol);
}

BoundReport lemma_alg_conn_min_degree(const GraphProfile& p, double tol) {
  if (p.metrics.is_complete()) return skipped("lemma_alg_conn_min_degree", BoundKind::Upper, "alg_conn", Reason::IsComplete);
  return upper("lemma_alg_conn_min_degree", "alg_conn", p.metrics.min_degree, p.spectrum.alg_conn(), tol);
}

BoundReport lemma_bipartite_mu1_zagreb(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  if (!m.is_bipartite) return skipped("lemma_bipartite_mu1_zagreb", BoundKind::Lower, "mu1", Reason::NotBipartite);
  if (m.m < 1) return skipped("lemma_bipartite_mu1_zagreb", BoundKind::Lower, "mu1", Reason::NotApplicable);
  return lower("lemma_bipartite_mu1_zagreb", "mu1", static_cast<double>(m.zagreb_z1) / m.m, p.spectrum.mu1(), tol);
}

BoundReport lemma_complement_spectrum(const GraphProfile& p, double tol) {
  const Spectrum predicted = complement_spectrum(p.spectrum, p.metrics.n);
  const Spectrum direct = spectrum(complement(p.graph));
  double err = 0.0;
  for (int i = 0; i < direct.order(); ++i) err = std::max(err, std::abs(predicted.mu[i] - direct.mu[i]));
  return upper("lemma_complement_spectrum", "max_abs_error", 0.0, err, tol);
}

BoundReport lemma_tree_alg_conn_diameter(const GraphProfile& p, double tol) {
  const auto& m = p.metrics;
  if (!m.is_tree()) return skipped("lemma_tree_alg_conn_diameter", BoundKind::Upper, "alg_conn", Reason::NotATree);
  if (m.n < 2) return skipped("lemma_tree_alg_conn_diameter", BoundKind::Upper, "alg_conn", Reason::TooSmall);
  const double value = 2.0 * (1.0 - std::cos(kPi / (m.diameter + 1.0)));
  return upper("lemma_tree_alg_conn_diameter", "alg_conn", value, p.spectrum.alg_conn(), tol);
}

BoundReport interlacing_report(const GraphProfile& p, const std::vector<std::vector<int>>& partition, double tol) {
  const QuotientResult q = quotient(laplacian(p.graph), partition);
  const int n = p.spectrum.order();
  const int k = q.blocks;
  double worst = 0.0;
  for (int i = 0; i < k; ++i) {
    worst = std::max(worst, q.eta[i] - p.spectrum.mu[i]);
    worst = std::max(worst, p.spectrum.mu[n - k + i] - q.eta[i]);
  }
  return upper("quotient_interlacing", "max_interlacing_violation", 0.0, worst, tol);
}

std::vector<std::vector<int>> neighborhood_partition(const Graph& g, int v) {
  std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<int> rest;
  for (int w = 0; w < g.order(); ++w)
    if (w != v && !g.has_edge(v, w)) rest.push_back(w);
  if (nb.empty() || rest.empty()) return {};
  return {{v}, std::move(nb), std::move(rest)};
}

std::vector<BoundReport> evaluate_all(const GraphProfile& p, double tol) {
  p.rl();
  std::vector<BoundReport> out;
  out.push_back(goldberg_lower(p, tol));
  out.push_back(haemers_diameter_upper(p, tol));

  // Cut density on a diametral pair of vertices, when nonadjacent.
  if (p.metrics.diameter >= 2) {
    for (int u = 0; u < p.metrics.n; ++u) {
      auto dist = bfs_distances(p.graph, u);
      auto far = std::max_element(dist.begin(), dist.end());
      if (*far == p.metrics.diameter) {
        out.push_back(cut_density_check(p, {u}, {static_cast<int>(far - dist.begin())}, tol));
        break;
      }
    }
  }
  out.push_back(kantorovich_kirchhoff_upper(p, tol));

  const AlphaShift shift = default_shift(p.spectrum);
  out.push_back(th31_lower(p, shift, tol));
  out.push_back(cor31_bipartite_lower(p, tol));
  out.push_back(th32_regular_trianglefree_lower(p, tol));
  out.push_back(youliu_regular_lower(p, tol));
  out.push_back(th33_upper(p, shift, tol));
  out.push_back(th34_complement_sum_lower(p, tol));

  out.push_back(th11_youliu_condition(p, tol));
  out.push_back(th41_condition(p, tol));
  out.push_back(th42_condition(p, tol));
  out.push_back(th43_condition(p, tol));
  out.push_back(cor41_condition(p, tol));
  out.push_back(th44_condition(p, tol));
  out.push_back(tree_mu1_upper(p, tol));
  out.push_back(tree_alg_conn_diameter_lower(p, tol));
  out.push_back(barrett_alg_conn_lower(p, tol));

  out.push_back(lemma_mu1_degree_lower(p, tol));
  out.push_back(lemma_mu1_order_upper(p, tol));
  out.push_back(lemma_alg_conn_min_degree(p, tol));
  out.push_back(lemma_bipartite_mu1_zagreb(p, tol));
  out.push_back(lemma_complement_spectrum(p, tol));
  out.push_back(lemma_tree_alg_conn_diameter(p, tol));
  if (auto part = neighborhood_partition(p.graph, 0); !part.empty()) {
    out.push_back(interlacing_report(p, part, tol));
  }
  return out;
}

}  // namespace spectra

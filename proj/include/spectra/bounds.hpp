#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

inline constexpr double kBoundTol = 1e-8;

enum class BoundKind { Lower, Upper, Implication };

/// Why a bound was not evaluated (or, for TriviallySatisfied, why it
/// needs no evaluation).
enum class Reason {
  None,
  NotApplicable,
  IsComplete,
  NotBipartite,
  NotRegular,
  HasTriangle,
  NotATree,
  IsStar,
  TooSmall,
  ComplementDisconnected,
  NegativeRadicand,
  TriviallySatisfied,
};

std::string_view to_string(BoundKind kind);
std::string_view to_string(Reason reason);

/// Outcome of one bound or conditional theorem on one graph.
///
/// Lower/Upper: `value` is the bound and `observed` the bounded quantity
/// (named by `target`); slack is observed - value for lower bounds and
/// value - observed for upper bounds.
///
/// Implication: `value` is the hypothesis threshold, `observed` the
/// quantity tested against it. `hypothesis` and `conclusion` are reported
/// separately; holds == !hypothesis || conclusion. Slack is the margin by
/// which the hypothesis fails when it is false, else the signed margin of
/// the conclusion.
///
/// Reports never carry NaN or infinity: out-of-domain evaluations set
/// applicable = false and a reason.
struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::Lower;
  std::string target;
  double value = 0.0;
  double observed = 0.0;
  bool applicable = false;
  bool holds = false;
  double slack = 0.0;
  Reason reason = Reason::None;
  bool hypothesis = false;
  bool conclusion = false;
};

/// Everything the evaluators need about one graph, computed once.
struct GraphProfile {
  Graph graph;
  GraphMetrics metrics;
  Spectrum spectrum;
  std::optional<RatioResult> ratio;  // empty when disconnected or n < 2

  double rl() const;  // throws Disconnected when ratio is empty
};

GraphProfile make_profile(const Graph& g);

/// Rank-one shift alpha used to build L + alpha J.
struct AlphaShift {
  double alpha = 0.0;
  bool valid = false;  // mu_{n-1} <= n alpha <= mu_1 (within kEigenTol)
};

AlphaShift make_shift(const Spectrum& spec, double alpha);
/// alpha = (mu_1 + mu_{n-1}) / (2n).
AlphaShift default_shift(const Spectrum& spec);

// Background bounds.
BoundReport goldberg_lower(const GraphProfile& p, double tol = kBoundTol);
BoundReport haemers_diameter_upper(const GraphProfile& p, double tol = kBoundTol);
/// Throws BadSets unless X, Y are nonempty, disjoint and edge-free between.
BoundReport cut_density_check(const GraphProfile& p, const std::vector<int>& x, const std::vector<int>& y,
                              double tol = kBoundTol);
BoundReport kantorovich_kirchhoff_upper(const GraphProfile& p, double tol = kBoundTol);

// Shifted-Laplacian trace bounds. Throw InvalidShift for an invalid shift.
BoundReport th31_lower(const GraphProfile& p, const AlphaShift& shift, double tol = kBoundTol);
BoundReport cor31_bipartite_lower(const GraphProfile& p, double tol = kBoundTol);
BoundReport th33_upper(const GraphProfile& p, const AlphaShift& shift, double tol = kBoundTol);

/// Omega = n^2(n-1)alpha^2 - 4mn alpha + n Z1 + 2mn - 4m^2.
double shift_omega(int n, int m, double z1, double alpha);
/// The explicit even/odd closed forms of the shifted trace lower bound.
double th31_display_value(int n, int m, double z1, double alpha);
/// The explicit Z1 closed forms for bipartite graphs (alpha = Z1/(mn)).
double cor31_display_value(int n, int m, double z1);
/// The explicit closed form of the shifted trace upper bound.
double th33_display_value(int n, int m, double z1, double alpha, double tau);

// Regular-graph bounds.
BoundReport th32_regular_trianglefree_lower(const GraphProfile& p, double tol = kBoundTol);
BoundReport youliu_regular_lower(const GraphProfile& p, double tol = kBoundTol);

BoundReport th34_complement_sum_lower(const GraphProfile& p, double tol = kBoundTol);
/// f(x, y) = x/y + (n-y)/(n-x).
double complement_sum_function(double x, double y, int n);

// Tree conditions (implication checks) and tree bounds.
BoundReport th11_youliu_condition(const GraphProfile& p, double tol = kBoundTol);
BoundReport th41_condition(const GraphProfile& p, double tol = kBoundTol);
BoundReport th42_condition(const GraphProfile& p, double tol = kBoundTol);
BoundReport th43_condition(const GraphProfile& p, double tol = kBoundTol);
BoundReport cor41_condition(const GraphProfile& p, double tol = kBoundTol);
BoundReport th44_condition(const GraphProfile& p, double tol = kBoundTol);
/// mu_1 < Delta + 2 sqrt(Delta + 1) for trees.
BoundReport tree_mu1_upper(const GraphProfile& p, double tol = kBoundTol);
/// mu_{n-1} >= 4 / (n D) for trees.
BoundReport tree_alg_conn_diameter_lower(const GraphProfile& p, double tol = kBoundTol);
BoundReport barrett_alg_conn_lower(const GraphProfile& p, double tol = kBoundTol);

// Lemma invariants.
BoundReport lemma_mu1_degree_lower(const GraphProfile& p, double tol = kBoundTol);
BoundReport lemma_mu1_order_upper(const GraphProfile& p, double tol = kBoundTol);
BoundReport lemma_alg_conn_min_degree(const GraphProfile& p, double tol = kBoundTol);
BoundReport lemma_bipartite_mu1_zagreb(const GraphProfile& p, double tol = kBoundTol);
BoundReport lemma_complement_spectrum(const GraphProfile& p, double tol = kBoundTol);
BoundReport lemma_tree_alg_conn_diameter(const GraphProfile& p, double tol = kBoundTol);
BoundReport interlacing_report(const GraphProfile& p, const std::vector<std::vector<int>>& partition,
                               double tol = kBoundTol);

/// {v}, N(v), rest; empty when any block would be empty.
std::vector<std::vector<int>> neighborhood_partition(const Graph& g, int v);

/// Every bound and lemma check in a fixed order. Throws Disconnected.
std::vector<BoundReport> evaluate_all(const GraphProfile& p, double tol = kBoundTol);

}  // namespace spectra

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "spectra/bounds.hpp"
#include "spectra/tree_enum.hpp"

namespace spectra {

struct ScanRow {
  CanonicalTreeCode code;
  int n = 0;
  double ratio = 0.0;
  double mu1 = 0.0;
  double alg_conn = 0.0;
  int diameter = 0;
  int max_degree = 0;
  std::string family;  // path | star | broom(t) | caterpillar(D,D) | t_star | other
};

/// Ties in extremal selection closer than this are broken by code order.
inline constexpr double kRatioTieTol = 1e-10;

/// Worker count from an explicit value, else SPECTRA_JOBS, else 1.
unsigned resolve_jobs(unsigned requested);

/// Family tag for a tree code of order n.
std::string family_tag(const CanonicalTreeCode& code);

/// One row per free tree on n vertices, sorted by descending ratio, then
/// by enumeration order. Per-tree work is spread over `jobs` threads.
std::vector<ScanRow> scan_trees(int n, unsigned jobs = 1);

/// CSV header plus one line per row, ratio/mu1/alg_conn at 12 significant
/// digits.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

struct ConjectureVerdict {
  std::string id;
  bool holds = false;
  std::vector<ScanRow> witnesses;  // trees violating the claim
  std::string summary;
};

struct ExtremalResult {
  int n = 0;
  ScanRow min_row;
  ScanRow max_row;
  std::map<std::string, ConjectureVerdict> verdicts;
};

/// Minimum and maximum rows with ties inside kRatioTieTol resolved toward
/// the earlier enumeration order.
ExtremalResult extremes(const std::vector<ScanRow>& rows);

/// Star-minimal lower bound and path-maximal upper bound, judged
/// separately over all trees on n vertices (n >= 3).
ExtremalResult check_conjecture_11(const std::vector<ScanRow>& rows);
ExtremalResult check_conjecture_11(int n, unsigned jobs = 1);

/// Star-minimal lower bound and broom-maximal upper bound with
/// t = (n-3)/2 for odd n, (n-4)/2 for even n (n >= 8).
ExtremalResult check_conjecture_51(const std::vector<ScanRow>& rows);
ExtremalResult check_conjecture_51(int n, unsigned jobs = 1);

/// Broom parameter of the conjectured maximizer.
int conjectured_broom_t(int n);

struct TheoremSweep {
  std::string name;
  int checked = 0;       // trees where the check was applicable
  int hypothesis_true = 0;
  int violations = 0;
  std::vector<std::string> witnesses;  // canonical codes of violating trees
};

/// Runs the tree implication checks and tree bounds over every tree with
/// n in [n_lo, n_hi].
std::vector<TheoremSweep> sweep_conditional_theorems(int n_lo, int n_hi, double tol = kBoundTol);

struct TStarCheck {
  int n = 0;
  bool polynomial_matches = false;
  bool ratio_matches = false;
  bool strictly_between = false;
  double ratio_numeric = 0.0;
  double ratio_closed_form = 0.0;
  double path_ratio = 0.0;

  bool ok() const noexcept { return polynomial_matches && ratio_matches && strictly_between; }
};

/// Throws BadParams unless n is even and >= 6.
TStarCheck verify_tstar_formula(int n);

}  // namespace spectra

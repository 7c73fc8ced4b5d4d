#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/bounds.hpp"
#include "spectra/conjectures.hpp"
#include "spectra/families.hpp"
#include "spectra/spectral.hpp"
#include "spectra/tree_enum.hpp"
#include "support/oracles.hpp"

using namespace spectra;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (pass) detail = what;
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Outcome c10_reproduction() {
  Outcome o;
  const auto p = make_profile(cycle_graph(10));
  const double rl = p.rl();
  const double th32 = th32_regular_trianglefree_lower(p).value;
  const double youliu = youliu_regular_lower(p).value;
  o.require(std::abs(rl - 10.4721) <= 5e-4, "R_L(C10) = " + fmt(rl));
  o.require(std::abs(th32 - 4.1899) <= 5e-4, "th32 bound = " + fmt(th32));
  o.require(std::abs(youliu - 3.0748) <= 5e-4, "youliu bound = " + fmt(youliu));
  o.note("R_L = " + fmt(rl) + ", th32 = " + fmt(th32) + ", youliu = " + fmt(youliu));
  return o;
}

Outcome petersen_equality() {
  Outcome o;
  const Graph g = petersen_graph();
  const auto roots = real_roots(laplacian_charpoly(g));
  const std::vector<double> expected{0, 2, 2, 2, 2, 2, 5, 5, 5, 5};
  bool spectrum_ok = roots.size() == expected.size();
  for (std::size_t i = 0; spectrum_ok && i < roots.size(); ++i) spectrum_ok = std::abs(roots[i] - expected[i]) < 1e-9;
  o.require(spectrum_ok, "exact spectrum is not {5^4, 2^5, 0}");
  const auto p = make_profile(g);
  const auto r = th32_regular_trianglefree_lower(p);
  o.require(std::abs(p.rl() - 2.5) <= 1e-8, "R_L = " + fmt(p.rl()));
  o.require(r.applicable && std::abs(r.value - p.rl()) <= 1e-8, "bound = " + fmt(r.value));
  o.note("bound - R_L = " + fmt(r.value - p.rl()));
  return o;
}

Outcome youliu_upper_falsified() {
  Outcome o;
  const auto rows = scan_trees(9, resolve_jobs(0));
  o.require(rows.size() == 47, "scan produced " + std::to_string(rows.size()) + " trees");
  auto ratio_of = [&](const Graph& g) {
    const auto code = canonical_code(g);
    for (const auto& r : rows)
      if (r.code == code) return r.ratio;
    o.require(false, "tree missing from scan");
    return 0.0;
  };
  const double b3 = ratio_of(broom_graph(9, 3));
  const double b2 = ratio_of(broom_graph(9, 2));
  const double b4 = ratio_of(broom_graph(9, 4));
  const double p9 = ratio_of(path_graph(9));
  o.require(b3 - b2 > 1e-6 && b2 - b4 > 1e-6 && b4 - p9 > 1e-6,
            "chain broken: " + fmt(b3) + " " + fmt(b2) + " " + fmt(b4) + " " + fmt(p9));
  const auto ex = extremes(rows);
  o.require(ex.max_row.code == canonical_code(broom_graph(9, 3)), "maximum is " + ex.max_row.code.to_string());
  const auto verdict = check_conjecture_11(rows).verdicts.at("conj11_upper");
  o.require(!verdict.holds, "conjecture upper bound not flagged");
  o.note(fmt(b3) + " > " + fmt(b2) + " > " + fmt(b4) + " > " + fmt(p9));
  return o;
}

Outcome star_minimum() {
  Outcome o;
  for (int n = 3; n <= 11; ++n) {
    const auto ex = extremes(scan_trees(n, resolve_jobs(0)));
    o.require(ex.min_row.code == canonical_code(star_graph(n)), "n=" + std::to_string(n) + " minimum is not the star");
    o.require(std::abs(ex.min_row.ratio - n) <= 1e-8, "n=" + std::to_string(n) + " minimum ratio " + fmt(ex.min_row.ratio));
  }
  o.note("n = 3..11");
  return o;
}

Outcome caterpillar_closed_form() {
  Outcome o;
  int checked = 0;
  double worst = 0;
  for (int diam = 3; diam <= 41; ++diam) {
    for (int delta = 3; (delta - 1) * (diam - 1) <= 40; ++delta) {
      const int n = (delta - 1) * (diam - 1);
      if (n < 5) continue;
      const std::string tag = "(" + std::to_string(delta) + "," + std::to_string(diam) + ")";
      const auto cf = caterpillar_ratio_closed_form(delta, diam);
      const auto num = spectral_ratio(caterpillar_graph(delta, diam));
      worst = std::max(worst, std::abs(cf.ratio - num.ratio));
      o.require(std::abs(cf.ratio - num.ratio) <= 1e-7, tag + " closed form " + fmt(cf.ratio) + " vs " + fmt(num.ratio));
      o.require(n < num.ratio && num.ratio < path_ratio_closed_form(n), tag + " outside (n, R_L(P_n))");
      ++checked;
    }
  }
  o.note(std::to_string(checked) + " caterpillars, max |diff| = " + fmt(worst));
  return o;
}

Outcome broom_identity() {
  Outcome o;
  int checked = 0;
  for (int n = 5; n <= 14; ++n) {
    for (int t = 1; t <= n - 3; ++t) {
      o.require(broom_charpoly_closed_form(n, t) == laplacian_charpoly(broom_graph(n, t)),
                "B_" + std::to_string(n) + "^" + std::to_string(t));
      ++checked;
    }
  }
  o.note(std::to_string(checked) + " brooms equal coefficient-for-coefficient");
  return o;
}

Outcome tstar_identity() {
  Outcome o;
  for (int n = 6; n <= 16; n += 2) {
    const auto c = verify_tstar_formula(n);
    o.require(c.polynomial_matches, "n=" + std::to_string(n) + " polynomial");
    o.require(c.ratio_matches, "n=" + std::to_string(n) + " ratio " + fmt(c.ratio_numeric) + " vs " + fmt(c.ratio_closed_form));
    o.require(c.strictly_between, "n=" + std::to_string(n) + " outside (n, R_L(P_n))");
  }
  o.note("even n = 6..16");
  return o;
}

Outcome bound_property_suite() {
  Outcome o;
  int graphs = 0;
  int reports = 0;
  auto check = [&](const Graph& g, const std::string& label) {
    ++graphs;
    for (const auto& r : evaluate_all(make_profile(g))) {
      if (!r.applicable) continue;
      ++reports;
      o.require(r.holds, label + ": " + r.name + " slack " + fmt(r.slack));
    }
  };
  for (int n = 2; n <= 10; ++n) {
    FreeTreeGenerator gen(n);
    while (gen.next()) check(gen.graph(), "tree " + gen.code().to_string());
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(2, 14);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  for (int i = 0; i < 100; ++i) check(oracle::random_connected_graph(order(rng), density(rng), rng), "random #" + std::to_string(i));
  o.note(std::to_string(graphs) + " graphs, " + std::to_string(reports) + " applicable reports, zero violations");
  return o;
}

Outcome conditional_sweep() {
  Outcome o;
  int checked = 0;
  for (const auto& s : sweep_conditional_theorems(2, 11)) {
    checked += s.checked;
    o.require(s.violations == 0, s.name + " has " + std::to_string(s.violations) + " violations");
  }
  o.note(std::to_string(checked) + " implication and tree-bound checks");
  return o;
}

Outcome enumeration_correctness() {
  Outcome o;
  for (int n = 2; n <= 9; ++n) {
    const auto got = enumerate_free_tree_codes(n).size();
    const auto oracle = prufer_oracle_count(n);
    o.require(got == oracle, "n=" + std::to_string(n) + ": " + std::to_string(got) + " vs oracle " + std::to_string(oracle));
  }
  std::ostringstream first, second;
  write_scan_csv(first, scan_trees(9, 1));
  write_scan_csv(second, scan_trees(9, 4));
  o.require(first.str() == second.str(), "scan CSV differs between runs");
  o.note("counts match the oracle for n = 2..9; CSV byte-identical");
  return o;
}

Outcome broom_conjecture() {
  Outcome o;
  std::string seen;
  for (int n = 8; n <= 12; ++n) {
    const auto r = check_conjecture_51(n, resolve_jobs(0));
    const auto& v = r.verdicts.at("conj51_upper");
    o.require(v.holds, v.summary);
    seen += (seen.empty() ? "" : ", ") + std::to_string(n) + ":" + r.max_row.family;
  }
  o.note(seen);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "C10 reproduction", 1, c10_reproduction},
      {2, "Petersen equality", 1, petersen_equality},
      {3, "path upper bound falsified at n=9", 5, youliu_upper_falsified},
      {4, "star is the minimum for n in [3,11]", 120, star_minimum},
      {5, "caterpillar closed form", 30, caterpillar_closed_form},
      {6, "broom polynomial identity", 30, broom_identity},
      {7, "T* identity", 10, tstar_identity},
      {8, "bound property suite", 180, bound_property_suite},
      {9, "conditional theorem sweep", 180, conditional_sweep},
      {10, "enumeration correctness", 120, enumeration_correctness},
      {11, "broom maximum for n in [8,12]", 300, broom_conjecture},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over budget of " + fmt(c.budget_seconds) + " s)";
    }
    failures += !o.pass;
    std::printf("%s [%2d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

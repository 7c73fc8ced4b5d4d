#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectra/bounds.hpp"
#include "spectra/conjectures.hpp"
#include "spectra/error.hpp"
#include "spectra/families.hpp"
#include "spectra/graph_io.hpp"
#include "spectra/report.hpp"
#include "spectra/spectral.hpp"
#include "spectra/tree_enum.hpp"

using namespace spectra;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kDomain = 2, kBudget = 3 };

struct Options {
  std::string family;
  std::string file;
  std::string format = "json";
  std::string out;
  std::string which = "all";
  int n = 0;
  int n_lo = 2;
  bool check_conjectures = false;
  double tol = kBoundTol;
  unsigned jobs = 0;
};

struct Input {
  Graph graph;
  std::string label;
  std::optional<FamilySpec> family;
};

Input load_input(const Options& o) {
  if (o.family.empty() == o.file.empty()) throw Error(ErrorCode::BadParams, "give exactly one of --family or --file");
  if (!o.family.empty()) {
    FamilySpec spec = parse_family_spec(o.family);
    return {make_family(spec), spec.to_string(), spec};
  }
  return {read_graph_file(o.file), o.file, std::nullopt};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_spectrum(const Options& o) {
  const Input in = load_input(o);
  const Spectrum spec = spectrum(in.graph);
  std::optional<RatioResult> ratio;
  std::string error;
  if (in.graph.order() >= 2) {
    try {
      ratio = spectral_ratio(spec);
    } catch (const Error& e) {
      error = e.what();
    }
  }
  if (o.format == "csv") {
    std::cout << "index,mu\n";
    for (std::size_t i = 0; i < spec.mu.size(); ++i) {
      const double mu = std::abs(spec.mu[i]) < kEigenTol ? 0.0 : spec.mu[i];
      std::cout << i << ',' << format_sig12(mu) << '\n';
    }
  } else {
    json j = make_report("spectrum", o.tol);
    j["graph"] = graph_descriptor(in.graph, in.label);
    j["spectrum"] = rounded(spec.mu, kEigenTol);
    j["connected"] = spec.connected();
    if (ratio) {
      j["ratio"] = round_sig12(ratio->ratio);
      j["mu1"] = round_sig12(ratio->mu1);
      j["alg_conn"] = round_sig12(ratio->alg_conn);
    } else {
      j["ratio"] = nullptr;
    }
    emit(j);
  }
  if (!error.empty()) {
    std::cerr << "error: " << error << '\n';
    return kDomain;
  }
  return kOk;
}

int cmd_bounds(const Options& o) {
  const Input in = load_input(o);
  const GraphProfile p = make_profile(in.graph);
  std::vector<BoundReport> reports = evaluate_all(p, o.tol);
  if (o.which != "all") {
    std::vector<std::string> wanted;
    std::stringstream ss(o.which);
    for (std::string name; std::getline(ss, name, ',');) wanted.push_back(name);
    for (const auto& name : wanted) {
      if (std::none_of(reports.begin(), reports.end(), [&](const BoundReport& r) { return r.name == name; })) {
        throw Error(ErrorCode::BadParams, "unknown bound '" + name + "'");
      }
    }
    std::erase_if(reports, [&](const BoundReport& r) {
      return std::find(wanted.begin(), wanted.end(), r.name) == wanted.end();
    });
  }
  if (o.format == "csv") {
    std::cout << "name,kind,target,applicable,holds,value,observed,slack,reason\n" << std::boolalpha;
    for (const auto& r : reports) {
      std::cout << r.name << ',' << to_string(r.kind) << ',' << r.target << ',' << r.applicable << ',' << r.holds
                << ',';
      if (r.applicable) {
        std::cout << format_sig12(r.value) << ',' << format_sig12(r.observed) << ',' << format_sig12(r.slack) << ",\n";
      } else {
        std::cout << ",,," << to_string(r.reason) << '\n';
      }
    }
    return kOk;
  }
  json j = make_report("bounds", o.tol);
  j["graph"] = graph_descriptor(in.graph, in.label);
  j["ratio"] = p.ratio ? json(round_sig12(p.ratio->ratio)) : json(nullptr);
  auto arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  j["bounds"] = std::move(arr);
  int violations = 0;
  for (const auto& r : reports) violations += r.applicable && !r.holds;
  j["violations"] = violations;
  emit(j);
  return kOk;
}

int cmd_scan(const Options& o) {
  if (o.n < 1) throw Error(ErrorCode::BadParams, "scan needs --n >= 1");
  const auto rows = scan_trees(o.n, resolve_jobs(o.jobs));

  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, "cannot open " + o.out);
    write_scan_csv(f, rows);
    if (!f) throw Error(ErrorCode::IoError, "failed writing " + o.out);
  } else if (o.format == "csv") {
    write_scan_csv(std::cout, rows);
    return kOk;
  }

  json j = make_report("scan", o.tol);
  j["n"] = o.n;
  j["count"] = rows.size();
  const ExtremalResult ex = extremes(rows);
  j["min"] = to_json(ex.min_row);
  j["max"] = to_json(ex.max_row);
  if (o.check_conjectures) {
    json verdicts = json::object();
    if (o.n >= 3) {
      for (const auto& [id, v] : check_conjecture_11(rows).verdicts) verdicts[id] = to_json(v);
    }
    if (o.n >= 8) {
      for (const auto& [id, v] : check_conjecture_51(rows).verdicts) verdicts[id] = to_json(v);
    }
    j["verdicts"] = std::move(verdicts);
  }
  if (o.out.empty()) {
    auto arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    j["rows"] = std::move(arr);
  } else {
    j["csv"] = o.out;
  }
  emit(j);
  return kOk;
}

int cmd_charpoly(const Options& o) {
  const Input in = load_input(o);
  const IntPolynomial p = laplacian_charpoly(in.graph);
  json j = make_report("charpoly", o.tol);
  j["graph"] = graph_descriptor(in.graph, in.label);
  j["coefficients"] = to_json(p);
  j["polynomial"] = p.to_string();
  j["roots"] = rounded(real_roots(p), kEigenTol);
  std::optional<IntPolynomial> closed;
  if (in.family && in.family->name == "broom") {
    closed = broom_charpoly_closed_form(in.family->params.at(0), in.family->params.at(1));
  } else if (in.family && (in.family->name == "tstar" || in.family->name == "t_star")) {
    closed = t_star_charpoly_closed_form(in.family->params.at(0));
  }
  if (closed) {
    j["closed_form"] = {{"coefficients", to_json(*closed)}, {"polynomial", closed->to_string()}};
    j["verdict"] = *closed == p ? "EQUAL" : "DIFFERENT";
  }
  emit(j);
  return kOk;
}

int cmd_enumerate(const Options& o) {
  FreeTreeGenerator gen(o.n);
  std::cout << "canonical_code,graph6\n";
  while (gen.next()) std::cout << gen.code().to_string() << ',' << to_graph6(gen.graph()) << '\n';
  return kOk;
}

int cmd_sweep(const Options& o) {
  if (o.n < 2) throw Error(ErrorCode::BadParams, "sweep needs --n >= 2");
  if (o.n > kMaxEnumerationOrder) throw Error(ErrorCode::BudgetExceeded, "sweep limited by enumeration budget");
  json j = make_report("sweep", o.tol);
  j["n_lo"] = o.n_lo;
  j["n_hi"] = o.n;
  auto arr = json::array();
  int violations = 0;
  for (const auto& s : sweep_conditional_theorems(o.n_lo, o.n, o.tol)) {
    violations += s.violations;
    arr.push_back(to_json(s));
  }
  j["checks"] = std::move(arr);
  j["violations"] = violations;
  emit(j);
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
      return kBudget;
    case ErrorCode::NoConvergence:
      return kInternal;
    default:
      return kDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian spectral ratio toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "family spec name[:p1[:p2]], e.g. broom:9:3");
    sub->add_option("--file", o.file, "edge-list or graph6 file");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "bound tolerance")->check(CLI::PositiveNumber);
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum and spectral ratio");
  add_input(spectrum_cmd);
  add_format(spectrum_cmd);
  add_tol(spectrum_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every spectral-ratio bound");
  add_input(bounds_cmd);
  add_format(bounds_cmd);
  add_tol(bounds_cmd);
  bounds_cmd->add_option("--which", o.which, "'all' or a comma-separated list of bound names");

  auto* scan_cmd = app.add_subcommand("scan", "ratio of every free tree on n vertices");
  scan_cmd->add_option("--n", o.n, "tree order")->required();
  scan_cmd->add_option("--out", o.out, "write the scan CSV here");
  scan_cmd->add_flag("--check-conjectures", o.check_conjectures, "judge the extremal conjectures");
  scan_cmd->add_option("--jobs", o.jobs, "worker threads (default: SPECTRA_JOBS or 1)");
  add_format(scan_cmd);
  add_tol(scan_cmd);

  auto* charpoly_cmd = app.add_subcommand("charpoly", "exact Laplacian characteristic polynomial");
  add_input(charpoly_cmd);
  add_tol(charpoly_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list free trees on n vertices");
  enumerate_cmd->add_option("--n", o.n, "tree order")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "conditional tree theorems over all trees up to n");
  sweep_cmd->add_option("--n", o.n, "largest tree order")->required();
  sweep_cmd->add_option("--from", o.n_lo, "smallest tree order");
  add_tol(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kDomain;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(o);
    if (*bounds_cmd) return cmd_bounds(o);
    if (*scan_cmd) return cmd_scan(o);
    if (*charpoly_cmd) return cmd_charpoly(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*sweep_cmd) return cmd_sweep(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

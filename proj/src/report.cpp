#include "spectra/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "spectra/graph_io.hpp"

namespace spectra {

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_sig12(double x) { return std::strtod(format_sig12(x).c_str(), nullptr); }

nlohmann::json rounded(const std::vector<double>& xs, double zero_tol) {
  auto arr = nlohmann::json::array();
  for (double x : xs) arr.push_back(std::abs(x) < zero_tol ? 0.0 : round_sig12(x));
  return arr;
}

nlohmann::json graph_descriptor(const Graph& g, const std::string& label) {
  nlohmann::json j;
  j["label"] = label;
  j["n"] = g.order();
  j["m"] = g.size();
  if (g.order() <= kMaxGraph6Order) j["graph6"] = to_graph6(g);
  return j;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["kind"] = std::string(to_string(r.kind));
  j["target"] = r.target;
  j["applicable"] = r.applicable;
  j["holds"] = r.holds;
  if (r.applicable) {
    j["value"] = round_sig12(r.value);
    j["observed"] = round_sig12(r.observed);
    j["slack"] = round_sig12(r.slack);
  } else {
    j["reason"] = std::string(to_string(r.reason));
  }
  if (r.kind == BoundKind::Implication && r.applicable) {
    j["hypothesis"] = r.hypothesis;
    j["conclusion"] = r.conclusion;
  }
  return j;
}

nlohmann::json to_json(const ScanRow& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["canonical_code"] = r.code.to_string();
  j["ratio"] = round_sig12(r.ratio);
  j["mu1"] = round_sig12(r.mu1);
  j["alg_conn"] = round_sig12(r.alg_conn);
  j["diameter"] = r.diameter;
  j["max_degree"] = r.max_degree;
  j["family"] = r.family;
  return j;
}

nlohmann::json to_json(const ConjectureVerdict& v) {
  nlohmann::json j;
  j["id"] = v.id;
  j["holds"] = v.holds;
  j["summary"] = v.summary;
  auto w = nlohmann::json::array();
  for (const auto& r : v.witnesses) w.push_back(to_json(r));
  j["witnesses"] = std::move(w);
  return j;
}

nlohmann::json to_json(const ExtremalResult& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["min"] = to_json(r.min_row);
  j["max"] = to_json(r.max_row);
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [id, v] : r.verdicts) verdicts[id] = to_json(v);
  j["verdicts"] = std::move(verdicts);
  return j;
}

nlohmann::json to_json(const TheoremSweep& s) {
  return {{"name", s.name},
          {"checked", s.checked},
          {"hypothesis_true", s.hypothesis_true},
          {"violations", s.violations},
          {"witnesses", s.witnesses}};
}

nlohmann::json to_json(const IntPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p()) arr.push_back(c.get_si());
    else arr.push_back(c.get_str());
  }
  return arr;
}

nlohmann::json make_report(const std::string& command, double tol) {
  nlohmann::json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["tolerances"] = {{"bound", tol}, {"eigenvalue", 1e-9}, {"ratio", 1e-8}};
  return j;
}

}  // namespace spectra

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/bounds.hpp"
#include "spectra/conjectures.hpp"
#include "spectra/graph.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

inline constexpr const char* kVersion = "1.0.0";

/// 12 significant digits; printf rounds exact binary ties to even.
std::string format_sig12(double x);

/// The double nearest to format_sig12(x), so serialized JSON shows at most
/// 12 significant digits.
double round_sig12(double x);

nlohmann::json graph_descriptor(const Graph& g, const std::string& label);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ScanRow& r);
nlohmann::json to_json(const ConjectureVerdict& v);
nlohmann::json to_json(const ExtremalResult& r);
nlohmann::json to_json(const TheoremSweep& s);
nlohmann::json to_json(const IntPolynomial& p);
/// Entries with magnitude below zero_tol are written as 0.
nlohmann::json rounded(const std::vector<double>& xs, double zero_tol = 0.0);

/// Envelope shared by all CLI reports; keys serialize sorted.
nlohmann::json make_report(const std::string& command, double tol);

}  // namespace spectra

#pragma once

#include <string>

#include <json.hpp>

#include "srbm/classifier.hpp"
#include "srbm/fluid.hpp"
#include "srbm/sim.hpp"

namespace srbm::io {

using nlohmann::json;

/// Problem file schema:
///   {"dim": 2|3, "theta": [s,...], "R": [[s,...],...], "gamma": [[s,...],...]}
/// gamma is optional and defaults to the identity. Each scalar s is either
/// a JSON number (float mode) or a string "p/q" (exact mode); one file uses
/// one mode throughout.
ProblemData parse_problem(const json& doc);
ProblemData load_problem(const std::string& path);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Mode expected);

json vector_to_json(const Vector& v);
json matrix_to_json(const SquareMatrix& m);

/// 1-based index list.
json index_set_to_json(const std::vector<int>& idx);

json lcp_solution_to_json(const LcpSolution& s);
json spiral_report_to_json(const SpiralReport& r);
json necessary_condition_to_json(const NecessaryCondition& c);
json certificate_to_json(const Certificate& c);

/// Full verdict document: decision, basis, certificate, normalized data
/// and per-module diagnostics (schema-stable key set).
json verdict_to_json(const Verdict& v);

/// Rebuilds a verdict from its document for certificate re-validation.
/// The normalized block carries no covariance, so the identity is used;
/// certificates never depend on it.
Verdict verdict_from_json(const json& doc);

json fluid_path_to_json(const FluidPath& p);
json hitting_stats_to_json(const sim::HittingStats& s);
json normalization_to_json(const NormalizationRecord& r);

}  // namespace srbm::io

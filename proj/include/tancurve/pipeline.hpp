#pragma once

/// \file
/// \brief End-to-end reconstruction run with validation, statistics and
/// optional truth comparison.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tancurve/graph.hpp"
#include "tancurve/synth.hpp"
#include "tancurve/validate.hpp"

namespace tancurve {

struct GraphStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t candidate_edges = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::size_t leaves = 0;
  std::size_t branch_vertices = 0;  ///< degree > 2
  double min_edge_length = 0.0;     ///< 0 for an empty graph
};

GraphStats graph_stats(const PolyGraph& g, std::span<const TangentSample> samples);

struct RunReport {
  ReconstructionParams params;
  std::optional<double> declared_delta;
  std::size_t sample_count = 0;
  ValidationReport validation;
  GraphStats stats;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::optional<TruthDiff> truth;
};

struct RunResult {
  PolyGraph graph;
  PolyGraph candidate;
  RunReport report;
};

/// Validates (throwing ValidationError in strict mode before any work), then
/// builds the candidate graph and runs the selected algorithm. `truth` may be
/// a figure whose samples are exactly `samples`.
RunResult run_reconstruction(std::span<const TangentSample> samples,
                             const ReconstructionParams& params,
                             std::optional<double> declared_delta = std::nullopt,
                             const SyntheticFigure* truth = nullptr);

/// Timings are omitted when `with_timings` is false so reports can be
/// compared byte for byte.
nlohmann::json to_json(const RunReport& r, bool with_timings = true);
nlohmann::json to_json(const TruthDiff& d);

}  // namespace tancurve

#pragma once

/// \file
/// \brief Reconstruction parameters and the sufficient-condition checks
/// reported with every run.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tancurve/denoise.hpp"
#include "tancurve/geom.hpp"
#include "tancurve/graph.hpp"

namespace tancurve {

enum class Algorithm { noise_free, noisy, denoise };

struct ReconstructionParams {
  double kappa_max = 1.0;
  double epsilon = 0.1;
  double zeta = 0.0;
  double xi = 0.0;
  double alpha = 1.1;
  std::size_t sweeps = 4;
  std::optional<double> rho_max;
  double tol = kDefaultTolerance;
  Algorithm mode = Algorithm::noise_free;
  bool strict_validation = false;
  PairSource pair_source = PairSource::quadtree;
  bool closed_figures = true;
  std::uint64_t seed = 0;

  [[nodiscard]] ZoneParams zone() const;
  [[nodiscard]] DenoiseParams denoise() const;
  /// Throws InvalidInput for out-of-range values (independent of strictness).
  void check() const;
};

struct Check {
  std::string name;
  /// The inequality exactly as reported, e.g. "delta > 2 kappa_m epsilon^2".
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  /// False when an input (delta, spacing) was not available.
  bool evaluated = false;
  bool holds = false;
  /// Failure aborts the run under strict validation.
  bool enforced = false;
};

struct ValidationReport {
  std::vector<Check> checks;

  /// First enforced check that was not evaluated or does not hold.
  [[nodiscard]] const Check* first_strict_failure() const;
  [[nodiscard]] bool all_hold() const;
};

/// Strict-mode failure; the message contains the violated inequality.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const Check& failed);
  Check check;
};

/// Evaluates every sufficient condition (noise-free and noisy) and the noisy
/// spacing assumption. `observed_min_spacing` is the smallest distance
/// between reconstructed neighbours when known. Conditions of the selected
/// mode are enforced; the rest are diagnostics. Throws ValidationError
/// under strict validation.
ValidationReport validate(const ReconstructionParams& params, std::optional<double> declared_delta,
                          std::optional<double> observed_min_spacing = std::nullopt);

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const ReconstructionParams& p);

const char* to_string(Algorithm a);
const char* to_string(PairSource s);
Algorithm algorithm_from_string(const std::string& s);
PairSource pair_source_from_string(const std::string& s);

}  // namespace tancurve

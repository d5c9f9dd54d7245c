#pragma once

/// \file
/// \brief Separation/sampling phase sweep against a proximity baseline, and
/// candidate-graph scaling timings.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tancurve/graph.hpp"

namespace tancurve {

/// Joins every sample to its two Euclidean-nearest samples.
PolyGraph proximity_baseline(std::span<const TangentSample> samples);

std::vector<double> log_spaced(double lo, double hi, std::size_t count);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least squares fit of log(y) against log(x).
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

/// Two concentric circles of radius `radius` and `radius + delta`.
struct PhaseSweepOptions {
  std::vector<double> deltas = {};
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  double radius = 4.0;
  /// Curvature bound given to the tangent method; must be >= 1 / radius.
  double kappa_max = 0.5;
  double fill = 0.8;
  /// Search stops once hi / lo drops below this ratio.
  double precision = 1.02;
  /// 0 uses the hardware concurrency.
  std::size_t threads = 0;
};

struct PhaseRow {
  double delta = 0.0;
  double eps_tangent = 0.0;
  double eps_baseline = 0.0;
};

struct PhaseSweepResult {
  std::vector<PhaseRow> rows;
  LineFit tangent;
  LineFit baseline;

  [[nodiscard]] std::string to_csv() const;
};

enum class SweepMethod { tangent, baseline };

/// Exact reconstruction of the sweep figure in every trial at this epsilon.
bool sweep_trial_exact(SweepMethod method, double delta, double epsilon, const PhaseSweepOptions& opt);

/// Largest epsilon (up to the curvature cap 0.999 / (kappa sqrt 2)) for which
/// `method` reconstructs exactly in all trials. Searches downward from the
/// cap by halving, then bisects in log space.
double critical_epsilon(SweepMethod method, double delta, const PhaseSweepOptions& opt);

PhaseSweepResult phase_sweep(const PhaseSweepOptions& opt);

struct ScalingRow {
  std::size_t samples = 0;
  double milliseconds = 0.0;
};

/// Times fast_candidate_graph on grids of circles with fixed sampling
/// density; each size is the minimum over `repeats` runs.
std::vector<ScalingRow> scaling_benchmark(std::span<const std::size_t> target_sizes,
                                          std::size_t repeats = 3, std::uint64_t seed = 7);

}  // namespace tancurve

#pragma once

/// \file
/// \brief Deterministic SVG output of samples and graphs.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tancurve/graph.hpp"
#include "tancurve/synth.hpp"

namespace tancurve {

struct RenderOptions {
  double size_px = 800.0;
  /// Tangent tick half-length as a fraction of the view extent; 0 disables.
  double tangent_ticks = 0.0;
  double dot_radius_px = 2.0;
};

/// Optional truth overlay: edges not in `truth` are drawn as incorrect,
/// missing truth edges dashed, and spurious samples highlighted.
struct RenderTruth {
  const PolyGraph* truth = nullptr;
  std::span<const Provenance> provenance;
};

std::string render_svg(std::span<const TangentSample> samples, const PolyGraph& graph,
                       const RenderOptions& options = {}, const RenderTruth& truth = {});

}  // namespace tancurve

#pragma once

/// \file
/// \brief Polygonalization tolerant to spurious samples: almost-nearest
/// tangential neighbours and iterative leaf removal.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tancurve/graph.hpp"

namespace tancurve {

struct DenoiseParams {
  double alpha = 1.1;        ///< almost-nearest threshold, >= 1
  std::size_t sweeps = 4;    ///< leaf removal passes
  bool closed_figures = true;

  void check() const;
};

/// Members of `side_set` whose tangential distance to p_i is at most alpha
/// times the smallest one. Empty iff `side_set` is empty.
std::vector<Index> almost_nearest_set(Index i, std::span<const Index> side_set,
                                      std::span<const TangentSample> samples, double alpha);

/// `sweeps` passes; each pass marks every degree-1 vertex and then deletes all
/// edges incident to a marked vertex. Vertices are kept.
PolyGraph remove_leaves(const PolyGraph& g, std::size_t sweeps);

/// Union over both sides of every vertex of the almost-nearest edges of `g`.
PolyGraph select_almost_nearest_edges(const PolyGraph& g, std::span<const TangentSample> samples,
                                      double alpha, double tol = kDefaultTolerance);

/// Candidate graph (noise-free mutual allowed-region test by default), then
/// almost-nearest selection, then leaf removal when `dp.closed_figures`.
PolyGraph polygonalize_with_denoise(std::span<const TangentSample> samples, const ZoneParams& zp,
                                    const DenoiseParams& dp,
                                    PairSource source = PairSource::brute_force,
                                    Mode mode = Mode::noise_free,
                                    std::optional<double> rho_max = std::nullopt);

}  // namespace tancurve

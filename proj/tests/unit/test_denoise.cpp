#include <doctest.h>

#include <random>

#include "tancurve/denoise.hpp"
#include "tancurve/synth.hpp"

using namespace tancurve;

namespace {

PolyGraph path(std::size_t vertices) {
  std::vector<Edge> e;
  for (Index k = 0; k + 1 < vertices; ++k) e.push_back({k, k + 1});
  return PolyGraph(vertices, e);
}

TangentSample at(double x, double y, Index id) { return {{x, y}, UnorientedTangent({1, 0}), id}; }

}  // namespace

TEST_CASE("denoise params") {
  CHECK_NOTHROW(DenoiseParams{}.check());
  CHECK_THROWS_AS((DenoiseParams{0.99, 4, true}.check()), InvalidInput);
}

TEST_CASE("almost nearest set") {
  const std::vector<TangentSample> s{at(0, 0, 0), at(0.10, 0, 1), at(0.105, 0.01, 2), at(0.20, 0, 3)};
  const std::vector<Index> side{1, 2, 3};
  CHECK(almost_nearest_set(0, side, s, 1.1) == std::vector<Index>{1, 2});
  CHECK(almost_nearest_set(0, side, s, 1.0) == std::vector<Index>{1});
  CHECK(almost_nearest_set(0, std::vector<Index>{}, s, 1.1).empty());
  CHECK(almost_nearest_set(0, side, s, 2.0).size() == 3);
}

TEST_CASE("leaf removal traces") {
  // Six vertices, five edges: 0-1-2-3-4-5.
  const PolyGraph p6 = path(6);
  CHECK(remove_leaves(p6, 0) == p6);
  CHECK(remove_leaves(p6, 1) == PolyGraph(6, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(remove_leaves(p6, 2) == PolyGraph(6, {{2, 3}}));
  CHECK(remove_leaves(p6, 3).edge_count() == 0);
  CHECK(remove_leaves(p6, 3).vertex_count() == 6);

  // Five vertices: 0-1-2-3-4.
  const PolyGraph p5 = path(5);
  CHECK(remove_leaves(p5, 1) == PolyGraph(5, {{1, 2}, {2, 3}}));
  CHECK(remove_leaves(p5, 2).edge_count() == 0);

  PolyGraph cycle(7);
  for (Index k = 0; k < 7; ++k) cycle.add_edge(k, (k + 1) % 7);
  CHECK(remove_leaves(cycle, 10) == cycle);

  // A spur hanging off a cycle is trimmed, the cycle stays.
  PolyGraph spur = cycle;
  spur = PolyGraph(9, spur.edges());
  spur.add_edge(0, 7);
  spur.add_edge(7, 8);
  CHECK(remove_leaves(spur, 2) == PolyGraph(9, cycle.edges()));
}

TEST_CASE("leaf removal is monotone and settles") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    PolyGraph g(30);
    std::uniform_int_distribution<Index> pick(0, 29);
    for (int k = 0; k < 35; ++k) {
      const Index a = pick(rng), b = pick(rng);
      if (a != b) g.add_edge(a, b);
    }
    PolyGraph prev = g;
    for (std::size_t l = 1; l <= 35; ++l) {
      const PolyGraph cur = remove_leaves(g, l);
      CHECK(cur.is_subgraph_of(prev));
      prev = cur;
    }
    CHECK(remove_leaves(prev, 5) == prev);
  }
}

TEST_CASE("degenerate parameters reproduce the nearest neighbour output") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SyntheticFigure fig = sample_figure(figures::two_closed_curves(), 0.1, seed);
    const ZoneParams zp{3.0, 0.1, 0, 0, kDefaultTolerance};
    const PolyGraph base = polygonalize(fig.samples, zp, Mode::noise_free);
    CHECK(polygonalize_with_denoise(fig.samples, zp, {1.0, 0, true}) == base);
    CHECK(polygonalize_with_denoise(fig.samples, zp, {1.0, 4, false}) == base);
    CHECK(base == fig.truth);
  }
}

TEST_CASE("almost nearest edges grow with alpha") {
  const SyntheticFigure clean = sample_figure(figures::two_closed_curves(), 0.1, 3);
  const SyntheticFigure fig = inject_spurious(clean, 100, {{-1.1, -0.7}, {1.0, 0.7}}, 4);
  const ZoneParams zp{3.0, 0.1, 0, 0, kDefaultTolerance};
  const PolyGraph g = build_candidate_graph(fig.samples, zp, Mode::noise_free);
  PolyGraph prev = select_almost_nearest_edges(g, fig.samples, 1.0);
  for (double alpha : {1.05, 1.1, 1.5, 2.0, 4.0}) {
    const PolyGraph cur = select_almost_nearest_edges(g, fig.samples, alpha);
    CHECK(prev.is_subgraph_of(cur));
    CHECK(cur.is_subgraph_of(g));
    prev = cur;
  }
}

TEST_CASE("spurious connection rate grows faster than the ball area") {
  // A random point connects when another sample lies in its allowed region
  // and the reverse test holds, which shrinks faster than epsilon^2.
  auto rate = [](double eps) {
    std::size_t connected = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      FigureSpec spec;
      spec.curves.push_back({Circle{{0, 0}, 1.0}, std::nullopt});
      const SyntheticFigure clean = sample_figure(spec, eps, seed);
      const SyntheticFigure fig = inject_spurious(clean, 200, {{-1.2, -1.2}, {1.2, 1.2}}, seed + 100);
      const ZoneParams zp{1.2, eps, 0, 0, kDefaultTolerance};
      const PolyGraph g = polygonalize_with_denoise(fig.samples, zp, {1.1, 0, false});
      const auto deg = g.degrees();
      for (std::size_t i = clean.samples.size(); i < fig.samples.size(); ++i) {
        ++total;
        if (deg[i] > 0) ++connected;
      }
    }
    return static_cast<double>(connected) / static_cast<double>(total);
  };
  const double small = rate(0.05);
  const double large = rate(0.2);
  CHECK(small > 0.0);
  CHECK(large / small > 2.0 * 16.0);
}

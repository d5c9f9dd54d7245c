#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tancurve/graph.hpp"
#include "tancurve/synth.hpp"

using namespace tancurve;

namespace {

constexpr double kTau = 1e-9;

FigureSpec unit_circle() {
  FigureSpec s;
  s.curves.push_back({Circle{{0, 0}, 1.0}, std::nullopt});
  return s;
}

}  // namespace

TEST_CASE("curve descriptors") {
  const CurveShape circle = Circle{{1, 2}, 0.5};
  CHECK(curve::length(circle) == doctest::Approx(std::numbers::pi));
  CHECK(curve::closed(circle));
  CHECK(curve::curvature_bound(circle) == doctest::Approx(2.0));
  const CurveShape seg = Segment{{0, 0}, {3, 4}};
  CHECK(curve::length(seg) == doctest::Approx(5.0));
  CHECK_FALSE(curve::closed(seg));
  CHECK(curve::curvature_bound(seg) == 0.0);
  const CurveShape oval = Oval{{0, 0}, 0.6, 0.4};
  CHECK(curve::length(oval) == doctest::Approx(2 * std::numbers::pi * 0.4 + 4 * 0.2));
  CHECK(curve::curvature_bound(oval) == doctest::Approx(2.5));
  const CurveShape arc = Arc{{0, 0}, 2.0, 0.0, std::numbers::pi / 2};
  CHECK(curve::length(arc) == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(curve::check(Circle{{0, 0}, 0.0}), InvalidInput);
  CHECK_THROWS_AS(curve::check(Segment{{1, 1}, {1, 1}}), InvalidInput);

  for (const CurveShape& c : {circle, seg, oval, arc}) {
    const double len = curve::length(c);
    for (int k = 0; k <= 50; ++k) {
      const double s = len * k / 50.0;
      const Vec2 t = curve::tangent_at(c, s);
      CHECK(t.norm() == doctest::Approx(1.0));
      // Derivative matches the finite difference of point_at.
      const double h = 1e-6;
      const double s0 = std::max(0.0, s - h), s1 = std::min(len, s + h);
      const Vec2 fd = (curve::point_at(c, s1) - curve::point_at(c, s0)) * (1.0 / (s1 - s0));
      CHECK(std::abs(dot(fd, t)) == doctest::Approx(1.0).epsilon(1e-5));
      CHECK(curve::closest_arclength(c, curve::point_at(c, s)) == doctest::Approx(s).epsilon(1e-6));
    }
  }
}

TEST_CASE("uniform circle sampling") {
  SamplingOptions opt;
  opt.fill = 1.0;
  opt.jitter = 0.0;
  const SyntheticFigure fig = sample_figure(unit_circle(), 2 * std::numbers::pi / 16, 1, opt);
  CHECK(fig.samples.size() == 16);
  CHECK(fig.truth.edge_count() == 16);
  for (std::size_t d : fig.truth.degrees()) CHECK(d == 2);
}

TEST_CASE("segment sampling gives a path") {
  FigureSpec s;
  s.curves.push_back({Segment{{0, 0}, {1, 0}}, std::nullopt});
  const SyntheticFigure fig = sample_figure(s, 0.3, 2);
  CHECK(fig.samples.size() >= 4);
  CHECK(fig.truth.edge_count() == fig.samples.size() - 1);
  CHECK(fig.max_arc_gap <= 0.3);
  CHECK(fig.samples.front().pos == Vec2{0, 0});
  CHECK(fig.samples.back().pos == Vec2{1, 0});
}

TEST_CASE("concentric separation is measured") {
  for (double delta : {0.01, 0.05, 0.2}) {
    FigureSpec s = figures::concentric_circles({0.3, -0.2}, 1.0, delta);
    s.delta = delta;
    const SyntheticFigure fig = sample_figure(s, 0.1, 3);
    CHECK(std::abs(fig.min_separation_actual - delta) <= kTau);
    CHECK(fig.kappa_max_actual == doctest::Approx(1.0).epsilon(1e-3));
  }
  FigureSpec bad = figures::concentric_circles({0, 0}, 1.0, 0.05);
  bad.delta = 0.06;
  CHECK_THROWS_AS(sample_figure(bad, 0.1, 1), FigureSpecError);
  FigureSpec curvy = unit_circle();
  curvy.kappa_max = 0.9;
  CHECK_THROWS_AS(sample_figure(curvy, 0.1, 1), FigureSpecError);
}

TEST_CASE("figure families measure as declared") {
  const SyntheticFigure oval = sample_figure(figures::covered_oval(), 0.08, 1);
  CHECK(oval.min_separation_actual == doctest::Approx(0.15).epsilon(1e-6));
  CHECK(oval.kappa_max_actual <= 2.5 + 1e-9);
  const SyntheticFigure two = sample_figure(figures::two_closed_curves(), 0.1, 1);
  CHECK(two.samples.size() == 96);
  CHECK(two.min_separation_actual == doctest::Approx(0.24).epsilon(1e-6));
}

TEST_CASE("samples lie on their curves with exact tangents") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SyntheticFigure fig = sample_figure(figures::covered_oval(), 0.07, seed);
    CHECK(fig.max_arc_gap <= 0.07);
    for (std::size_t i = 0; i < fig.samples.size(); ++i) {
      const auto& c = fig.curves[static_cast<std::size_t>(fig.provenance[i].curve)];
      const double t = fig.provenance[i].t;
      CHECK(distance(curve::point_at(c, t), fig.samples[i].pos) <= kTau);
      CHECK(std::abs(std::abs(dot(curve::tangent_at(c, t), fig.samples[i].tangent.dir())) - 1.0) <= kTau);
    }
  }
}

TEST_CASE("identical seeds reproduce figures bit for bit") {
  const auto a = sample_figure(figures::two_closed_curves(), 0.1, 42);
  const auto b = sample_figure(figures::two_closed_curves(), 0.1, 42);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].pos == b.samples[i].pos);
    CHECK(a.samples[i].tangent == b.samples[i].tangent);
  }
  const auto c = sample_figure(figures::two_closed_curves(), 0.1, 43);
  CHECK_FALSE(c.samples[0].pos == a.samples[0].pos);
}

TEST_CASE("noise injection bounds") {
  const auto fig = sample_figure(figures::two_closed_curves(), 0.1, 1);
  const auto same = inject_noise(fig, 0, 0, 9);
  for (std::size_t i = 0; i < fig.samples.size(); ++i) CHECK(same.samples[i].pos == fig.samples[i].pos);

  const auto noisy = inject_noise(fig, 0.01, 0.02, 9);
  CHECK(noisy.truth == fig.truth);
  double max_shift = 0;
  for (std::size_t i = 0; i < fig.samples.size(); ++i) {
    max_shift = std::max(max_shift, distance(noisy.samples[i].pos, fig.samples[i].pos));
    const double c = std::abs(dot(noisy.samples[i].tangent.dir(), fig.samples[i].tangent.dir()));
    CHECK(std::acos(std::min(1.0, c)) <= 0.02 + 1e-12);
  }
  CHECK(max_shift <= 0.01);
  CHECK(max_shift > 0.005);
}

TEST_CASE("noisy regime with curvature five is constructible") {
  // kappa 5, epsilon 0.15, zeta = xi = 0.01: the noisy separation bound is
  // 4(0.01) + 4(0.15)(0.01) + 2.1(5)(0.0225) = 0.28225.
  const double bound = 4 * 0.01 + 4 * 0.15 * 0.01 + 2.1 * 5 * 0.15 * 0.15;
  CHECK(bound == doctest::Approx(0.28225));
  // Radius 0.5 keeps far arcs of one circle more than 0.3 apart under the
  // declared curvature bound.
  FigureSpec spec = figures::concentric_circles({0, 0}, 0.5, 0.3);
  spec.kappa_max = 5.0;
  spec.delta = 0.3;
  SamplingOptions opt;
  opt.zeta = 0.01;
  opt.xi = 0.01;
  const auto fig = inject_noise(sample_figure(spec, 0.15, 1, opt), 0.01, 0.01, 2);
  CHECK(fig.min_separation_actual > bound);
  for (const Edge& e : fig.truth.edges()) CHECK(distance(fig.samples[e.a].pos, fig.samples[e.b].pos) > 0.0);
}

TEST_CASE("spurious injection") {
  const auto fig = sample_figure(figures::two_closed_curves(), 0.1, 1);
  const BoundingBox box{{-1, -1}, {1, 1}};
  const auto same = inject_spurious(fig, 0, box, 3);
  CHECK(same.samples.size() == fig.samples.size());
  const auto more = inject_spurious(fig, 100, box, 3);
  CHECK(more.samples.size() == 196);
  CHECK(more.truth.edge_count() == fig.truth.edge_count());
  for (std::size_t i = 96; i < 196; ++i) {
    CHECK(more.provenance[i].spurious());
    CHECK(more.samples[i].id == i);
  }
  CHECK(inject_spurious(fig, 2000, box, 3).samples.size() == 2096);
}

TEST_CASE("truth comparison") {
  const auto fig = sample_figure(figures::two_closed_curves(), 0.1, 1);
  CHECK(compare_to_truth(fig.truth, fig).exact());
  PolyGraph minus = fig.truth;
  const Edge gone = minus.edges()[3];
  minus.remove_edge(gone.a, gone.b);
  const TruthDiff d = compare_to_truth(minus, fig);
  CHECK(d.missing.size() == 1);
  CHECK(d.extra.empty());
  PolyGraph cross = fig.truth;
  cross.add_edge(0, 95);
  CHECK(compare_to_truth(cross, fig).cross_curve_edges == 1);
  const ZoneParams zp{3.0, 0.1, 0, 0, kTau};
  CHECK(compare_to_truth(polygonalize(fig.samples, zp, Mode::noise_free), fig).exact());
}

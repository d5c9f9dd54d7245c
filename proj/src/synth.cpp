#include "tancurve/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <unordered_map>

namespace tancurve {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Uniform doubles from a fixed 64-bit engine; identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

Vec2 from_polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

// Stadium in local coordinates: long axis u, normal n, cap radius r and
// half straight length l.
struct StadiumFrame {
  Vec2 center;
  Vec2 u;
  Vec2 n;
  double r;
  double l;
};

StadiumFrame frame_of(const Oval& o) {
  const bool wide = o.half_width >= o.half_height;
  const double r = std::min(o.half_width, o.half_height);
  const double l = std::max(o.half_width, o.half_height) - r;
  return wide ? StadiumFrame{o.center, {1, 0}, {0, 1}, r, l}
              : StadiumFrame{o.center, {0, 1}, {-1, 0}, r, l};
}

Vec2 to_global(const StadiumFrame& f, Vec2 local) {
  return f.center + f.u * local.x + f.n * local.y;
}

// Pieces in order: bottom straight (+u), right cap, top straight (-u), left cap.
struct StadiumPoint {
  Vec2 pos;
  Vec2 tangent;
};

StadiumPoint stadium_at(const StadiumFrame& f, double s) {
  const double straight = 2.0 * f.l;
  const double cap = kPi * f.r;
  const double total = 2.0 * straight + 2.0 * cap;
  s = std::clamp(s, 0.0, total);
  if (s <= straight) {
    return {to_global(f, {-f.l + s, -f.r}), f.u};
  }
  s -= straight;
  if (s <= cap) {
    const double a = -kPi / 2 + s / f.r;
    const Vec2 local = Vec2{f.l, 0} + from_polar(f.r, a);
    const Vec2 tl{-std::sin(a), std::cos(a)};
    return {to_global(f, local), f.u * tl.x + f.n * tl.y};
  }
  s -= cap;
  if (s <= straight) {
    return {to_global(f, {f.l - s, f.r}), -f.u};
  }
  s -= straight;
  const double a = kPi / 2 + s / f.r;
  const Vec2 local = Vec2{-f.l, 0} + from_polar(f.r, a);
  const Vec2 tl{-std::sin(a), std::cos(a)};
  return {to_global(f, local), f.u * tl.x + f.n * tl.y};
}

double segment_closest(Vec2 a, Vec2 b, Vec2 q) {
  const Vec2 d = b - a;
  const double len2 = d.norm2();
  if (len2 == 0.0) return 0.0;
  return std::clamp(dot(q - a, d) / len2, 0.0, 1.0) * std::sqrt(len2);
}

double arc_closest(Vec2 center, double radius, double start, double sweep, Vec2 q) {
  const Vec2 d = q - center;
  const double ang = (d.x == 0.0 && d.y == 0.0) ? start : std::atan2(d.y, d.x);
  const double rel = wrap_angle(ang - start);
  if (rel <= sweep) return rel * radius;
  // Outside the arc: nearer endpoint in angle.
  const double past_end = rel - sweep;
  const double before_start = 2.0 * kPi - rel;
  return past_end < before_start ? sweep * radius : 0.0;
}

}  // namespace

namespace curve {

double length(const CurveShape& c) {
  return std::visit(overloaded{
                        [](const Circle& s) { return 2.0 * kPi * s.radius; },
                        [](const Segment& s) { return distance(s.from, s.to); },
                        [](const Arc& s) { return s.radius * s.sweep; },
                        [](const Oval& s) {
                          const auto f = frame_of(s);
                          return 4.0 * f.l + 2.0 * kPi * f.r;
                        },
                    },
                    c);
}

bool closed(const CurveShape& c) {
  return std::holds_alternative<Circle>(c) || std::holds_alternative<Oval>(c);
}

double curvature_bound(const CurveShape& c) {
  return std::visit(overloaded{
                        [](const Circle& s) { return 1.0 / s.radius; },
                        [](const Segment&) { return 0.0; },
                        [](const Arc& s) { return 1.0 / s.radius; },
                        [](const Oval& s) { return 1.0 / std::min(s.half_width, s.half_height); },
                    },
                    c);
}

Vec2 point_at(const CurveShape& c, double s) {
  return std::visit(overloaded{
                        [&](const Circle& k) { return k.center + from_polar(k.radius, s / k.radius); },
                        [&](const Segment& k) {
                          const double len = distance(k.from, k.to);
                          return k.from + (k.to - k.from) * (std::clamp(s, 0.0, len) / len);
                        },
                        [&](const Arc& k) {
                          return k.center + from_polar(k.radius, k.start_angle + s / k.radius);
                        },
                        [&](const Oval& k) { return stadium_at(frame_of(k), s).pos; },
                    },
                    c);
}

Vec2 tangent_at(const CurveShape& c, double s) {
  return std::visit(overloaded{
                        [&](const Circle& k) {
                          const double a = s / k.radius;
                          return Vec2{-std::sin(a), std::cos(a)};
                        },
                        [&](const Segment& k) { return (k.to - k.from) * (1.0 / distance(k.from, k.to)); },
                        [&](const Arc& k) {
                          const double a = k.start_angle + s / k.radius;
                          return Vec2{-std::sin(a), std::cos(a)};
                        },
                        [&](const Oval& k) { return stadium_at(frame_of(k), s).tangent; },
                    },
                    c);
}

double closest_arclength(const CurveShape& c, Vec2 q) {
  return std::visit(
      overloaded{
          [&](const Circle& k) { return arc_closest(k.center, k.radius, 0.0, 2.0 * kPi, q); },
          [&](const Segment& k) { return segment_closest(k.from, k.to, q); },
          [&](const Arc& k) { return arc_closest(k.center, k.radius, k.start_angle, k.sweep, q); },
          [&](const Oval& k) {
            const auto f = frame_of(k);
            const double straight = 2.0 * f.l;
            const double cap = kPi * f.r;
            // Candidates on each of the four pieces, in global arc length.
            const Vec2 b0 = to_global(f, {-f.l, -f.r});
            const Vec2 b1 = to_global(f, {f.l, -f.r});
            const Vec2 t0 = to_global(f, {f.l, f.r});
            const Vec2 t1 = to_global(f, {-f.l, f.r});
            const Vec2 cr = to_global(f, {f.l, 0});
            const Vec2 cl = to_global(f, {-f.l, 0});
            const double base = std::atan2(f.u.y, f.u.x);
            const double cands[4] = {
                segment_closest(b0, b1, q),
                straight + arc_closest(cr, f.r, base - kPi / 2, kPi, q),
                straight + cap + segment_closest(t0, t1, q),
                2.0 * straight + cap + arc_closest(cl, f.r, base + kPi / 2, kPi, q),
            };
            double best = cands[0];
            double best_d = std::numeric_limits<double>::infinity();
            for (double s : cands) {
              const double d = distance(stadium_at(f, s).pos, q);
              if (d < best_d) {
                best_d = d;
                best = s;
              }
            }
            return best;
          },
      },
      c);
}

void check(const CurveShape& c) {
  std::visit(overloaded{
                 [](const Circle& k) {
                   if (!(k.radius > 0.0) || !k.center.finite()) throw InvalidInput("circle radius must be > 0");
                 },
                 [](const Segment& k) {
                   if (!k.from.finite() || !k.to.finite() || distance(k.from, k.to) <= 0.0)
                     throw InvalidInput("segment must have positive length");
                 },
                 [](const Arc& k) {
                   if (!(k.radius > 0.0) || !(k.sweep > 0.0) || k.sweep >= 2.0 * kPi)
                     throw InvalidInput("arc needs radius > 0 and sweep in (0, 2 pi)");
                 },
                 [](const Oval& k) {
                   if (!(k.half_width > 0.0) || !(k.half_height > 0.0))
                     throw InvalidInput("oval half extents must be > 0");
                 },
             },
             c);
}

}  // namespace curve

double noisy_min_spacing(double epsilon, double zeta, double xi) {
  return (1.0 + 2.0 * std::numbers::sqrt2) * (2.0 * xi * epsilon + zeta);
}

namespace {

struct DensePoint {
  Vec2 pos;
  std::int32_t curve;
  double s;
};

std::vector<DensePoint> dense_points(std::span<const CurveShape> curves, double step) {
  std::vector<DensePoint> out;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const double len = curve::length(curves[c]);
    const bool loop = curve::closed(curves[c]);
    const auto n = static_cast<std::size_t>(std::max(8.0, std::ceil(len / step)));
    const std::size_t count = loop ? n : n + 1;
    for (std::size_t k = 0; k < count; ++k) {
      const double s = len * static_cast<double>(k) / static_cast<double>(n);
      out.push_back({curve::point_at(curves[c], s), static_cast<std::int32_t>(c), s});
    }
  }
  return out;
}

double measure_curvature(std::span<const CurveShape> curves, double step) {
  double worst = 0.0;
  for (const auto& c : curves) {
    const double len = curve::length(c);
    const double h = std::min(step, len / 64.0);
    const auto n = static_cast<std::size_t>(std::ceil(len / h));
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      const double s = len * static_cast<double>(k) / static_cast<double>(n);
      const double ds = len / static_cast<double>(n);
      const Vec2 a = curve::point_at(c, s - ds);
      const Vec2 b = curve::point_at(c, s);
      const Vec2 d = curve::point_at(c, std::min(s + ds, len));
      // Menger curvature of three points: 4 * area / product of sides.
      const double cross = std::abs((b.x - a.x) * (d.y - a.y) - (b.y - a.y) * (d.x - a.x));
      const double denom = distance(a, b) * distance(b, d) * distance(a, d);
      if (denom > 0.0) worst = std::max(worst, 2.0 * cross / denom);
    }
  }
  return worst;
}

double arc_separation(const CurveShape& c, double s0, double s1) {
  const double d = std::abs(s0 - s1);
  return curve::closed(c) ? std::min(d, curve::length(c) - d) : d;
}

// Refines the distance between two different curves from a starting pair by
// alternating closest-point projections.
double refine_cross_distance(const CurveShape& a, const CurveShape& b, Vec2 start) {
  Vec2 x = start;
  Vec2 y = curve::point_at(b, curve::closest_arclength(b, x));
  double best = distance(x, y);
  for (int it = 0; it < 64; ++it) {
    x = curve::point_at(a, curve::closest_arclength(a, y));
    y = curve::point_at(b, curve::closest_arclength(b, x));
    const double d = distance(x, y);
    if (d >= best - 1e-15) {
      best = std::min(best, d);
      break;
    }
    best = d;
  }
  return best;
}

// Smallest distance between different curves, or between parts of one curve
// more than `far_arc` apart along it.
double measure_separation(std::span<const CurveShape> curves, double step, double far_arc) {
  const auto pts = dense_points(curves, step);
  if (pts.size() < 2) return std::numeric_limits<double>::infinity();

  Vec2 lo = pts.front().pos;
  Vec2 hi = lo;
  for (const auto& p : pts) {
    lo = {std::min(lo.x, p.pos.x), std::min(lo.y, p.pos.y)};
    hi = {std::max(hi.x, p.pos.x), std::max(hi.y, p.pos.y)};
  }
  const double diag = distance(lo, hi);

  auto valid = [&](const DensePoint& p, const DensePoint& q) {
    if (p.curve != q.curve) return true;
    return arc_separation(curves[static_cast<std::size_t>(p.curve)], p.s, q.s) > far_arc;
  };

  for (double radius = 4.0 * step; radius <= 2.0 * diag + step; radius *= 4.0) {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
    auto key = [&](std::int64_t cx, std::int64_t cy) {
      return (static_cast<std::uint64_t>(cx) << 32) ^ (static_cast<std::uint64_t>(cy) & 0xffffffffULL);
    };
    auto cell = [&](Vec2 p) {
      return std::pair{static_cast<std::int64_t>(std::floor((p.x - lo.x) / radius)),
                       static_cast<std::int64_t>(std::floor((p.y - lo.y) / radius))};
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [cx, cy] = cell(pts[i].pos);
      grid[key(cx, cy)].push_back(i);
    }
    double best_same = std::numeric_limits<double>::infinity();
    // Closest dense pair per ordered curve pair (a < b).
    std::vector<std::pair<double, std::size_t>> cross(curves.size() * curves.size(),
                                                      {std::numeric_limits<double>::infinity(), 0});
    bool found = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [cx, cy] = cell(pts[i].pos);
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          auto it = grid.find(key(cx + dx, cy + dy));
          if (it == grid.end()) continue;
          for (std::size_t j : it->second) {
            if (j <= i || !valid(pts[i], pts[j])) continue;
            const double d = distance(pts[i].pos, pts[j].pos);
            if (d > radius) continue;
            found = true;
            if (pts[i].curve == pts[j].curve) {
              best_same = std::min(best_same, d);
            } else {
              const auto a = static_cast<std::size_t>(std::min(pts[i].curve, pts[j].curve));
              const auto b = static_cast<std::size_t>(std::max(pts[i].curve, pts[j].curve));
              auto& slot = cross[a * curves.size() + b];
              const std::size_t on_a = pts[i].curve == static_cast<std::int32_t>(a) ? i : j;
              if (d < slot.first) slot = {d, on_a};
            }
          }
        }
      }
    }
    if (!found) continue;
    double best = best_same;
    for (std::size_t a = 0; a < curves.size(); ++a) {
      for (std::size_t b = a + 1; b < curves.size(); ++b) {
        const auto& slot = cross[a * curves.size() + b];
        if (!std::isfinite(slot.first)) continue;
        best = std::min({best, slot.first,
                         refine_cross_distance(curves[a], curves[b], pts[slot.second].pos)});
      }
    }
    return best;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

SyntheticFigure sample_figure(const FigureSpec& spec, double epsilon, std::uint64_t seed,
                              const SamplingOptions& options) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidInput("epsilon must be > 0");
  if (spec.curves.empty()) throw InvalidInput("figure has no curves");
  if (!(options.fill > 0.0 && options.fill <= 1.0)) throw InvalidInput("fill must be in (0, 1]");
  if (!(options.jitter >= 0.0 && options.jitter <= 1.0)) throw InvalidInput("jitter must be in [0, 1]");

  SyntheticFigure fig;
  fig.epsilon = epsilon;
  for (const auto& c : spec.curves) {
    curve::check(c.shape);
    fig.curves.push_back(c.shape);
  }

  double total_length = 0.0;
  for (const auto& c : fig.curves) total_length += curve::length(c);
  fig.measurement_resolution = options.resolution > 0.0
                                   ? options.resolution
                                   : std::max(epsilon / 16.0, total_length / 20000.0);
  fig.kappa_max_actual = measure_curvature(fig.curves, fig.measurement_resolution);
  if (spec.kappa_max && fig.kappa_max_actual > *spec.kappa_max * (1.0 + 1e-9) + 1e-9) {
    throw FigureSpecError("measured curvature " + std::to_string(fig.kappa_max_actual) +
                          " exceeds declared kappa_max " + std::to_string(*spec.kappa_max));
  }
  const double kappa = spec.kappa_max ? *spec.kappa_max : fig.kappa_max_actual;
  const double far_arc =
      kappa > 0.0 ? (kPi / 2.0) / kappa : std::numeric_limits<double>::infinity();
  fig.min_separation_actual = measure_separation(fig.curves, fig.measurement_resolution, far_arc);
  if (spec.delta && fig.min_separation_actual < *spec.delta * (1.0 - 1e-9)) {
    throw FigureSpecError("measured separation " + std::to_string(fig.min_separation_actual) +
                          " is below declared delta " + std::to_string(*spec.delta));
  }

  const double min_spacing = noisy_min_spacing(epsilon, options.zeta, options.xi);
  // Arc gap that keeps the chord above min_spacing with margin.
  const double min_arc_gap = min_spacing > 0.0 ? 1.05 * min_spacing : 0.0;

  Rng rng(seed);
  std::vector<Edge> truth;
  fig.max_arc_gap = 0.0;
  fig.min_arc_gap = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < spec.curves.size(); ++c) {
    const CurveShape& shape = spec.curves[c].shape;
    const double len = curve::length(shape);
    const bool loop = curve::closed(shape);
    std::size_t intervals;
    if (spec.curves[c].samples) {
      const std::size_t n = *spec.curves[c].samples;
      if (n < (loop ? 3u : 2u)) throw InvalidInput("too few samples on curve " + std::to_string(c));
      intervals = loop ? n : n - 1;
    } else {
      // Slack absorbs rounding when epsilon divides the length exactly.
      intervals = static_cast<std::size_t>(std::ceil(len / (options.fill * epsilon) - 1e-9));
      intervals = std::max<std::size_t>(intervals, loop ? 3 : 1);
    }
    const double h = len / static_cast<double>(intervals);
    if (h > epsilon * (1.0 + 1e-12)) {
      throw InvalidInput("curve " + std::to_string(c) + " cannot be epsilon-sampled with " +
                         std::to_string(intervals) + " intervals");
    }
    if (h <= min_arc_gap) {
      throw InvalidInput("curve " + std::to_string(c) +
                         ": epsilon too small for the noisy minimum spacing");
    }
    const double amp = options.jitter * 0.5 *
                       std::max(0.0, std::min(epsilon - h, min_arc_gap > 0.0 ? h - min_arc_gap : h));

    std::vector<double> params;
    if (loop) {
      const double phase = rng.uniform(0.0, len);
      for (std::size_t k = 0; k < intervals; ++k) {
        const double s = phase + h * static_cast<double>(k) + rng.uniform(-amp, amp);
        params.push_back(std::fmod(s + len, len));
      }
      // Keep curve order: rotate so parameters ascend from the smallest.
      std::rotate(params.begin(), std::min_element(params.begin(), params.end()), params.end());
    } else {
      for (std::size_t k = 0; k <= intervals; ++k) {
        double s = h * static_cast<double>(k);
        if (k != 0 && k != intervals) s += rng.uniform(-amp, amp);
        params.push_back(s);
      }
    }

    const auto first = static_cast<Index>(fig.samples.size());
    for (double s : params) {
      const auto id = static_cast<Index>(fig.samples.size());
      fig.samples.emplace_back(curve::point_at(shape, s), UnorientedTangent(curve::tangent_at(shape, s)), id);
      fig.provenance.push_back({static_cast<std::int32_t>(c), s});
    }
    const std::size_t n = params.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double gap = params[k + 1] - params[k];
      fig.max_arc_gap = std::max(fig.max_arc_gap, gap);
      fig.min_arc_gap = std::min(fig.min_arc_gap, gap);
      truth.push_back(Edge::make(first + static_cast<Index>(k), first + static_cast<Index>(k + 1)));
    }
    if (loop) {
      const double gap = params.front() + len - params.back();
      fig.max_arc_gap = std::max(fig.max_arc_gap, gap);
      fig.min_arc_gap = std::min(fig.min_arc_gap, gap);
      truth.push_back(Edge::make(first + static_cast<Index>(n - 1), first));
    }
  }
  if (fig.max_arc_gap > epsilon * (1.0 + 1e-12)) {
    throw InvalidInput("internal: sampling exceeded epsilon");
  }
  if (min_spacing > 0.0) {
    for (const Edge& e : truth) {
      if (distance(fig.samples[e.a].pos, fig.samples[e.b].pos) <= min_spacing) {
        throw InvalidInput("adjacent samples closer than the noisy minimum spacing");
      }
    }
  }
  fig.truth = PolyGraph(fig.samples.size(), std::move(truth));
  return fig;
}

SyntheticFigure inject_noise(const SyntheticFigure& fig, double zeta, double xi,
                             std::uint64_t seed) {
  if (!(zeta >= 0.0) || !(xi >= 0.0)) throw InvalidInput("noise amplitudes must be >= 0");
  SyntheticFigure out = fig;
  if (zeta == 0.0 && xi == 0.0) return out;
  Rng rng(seed);
  for (auto& s : out.samples) {
    const double r = zeta * std::sqrt(rng.uniform());
    const double a = rng.uniform(0.0, 2.0 * kPi);
    const double turn = rng.uniform(-xi, xi);
    if (zeta > 0.0) s.pos = s.pos + from_polar(r, a);
    if (xi > 0.0) {
      const Vec2 d = s.tangent.dir();
      const double c = std::cos(turn);
      const double sn = std::sin(turn);
      s.tangent = UnorientedTangent(Vec2{c * d.x - sn * d.y, sn * d.x + c * d.y});
    }
  }
  return out;
}

BoundingBox bounding_box(std::span<const TangentSample> samples) {
  if (samples.empty()) return {};
  BoundingBox box{samples.front().pos, samples.front().pos};
  for (const auto& s : samples) {
    box.min = {std::min(box.min.x, s.pos.x), std::min(box.min.y, s.pos.y)};
    box.max = {std::max(box.max.x, s.pos.x), std::max(box.max.y, s.pos.y)};
  }
  return box;
}

SyntheticFigure inject_spurious(const SyntheticFigure& fig, std::size_t count,
                                const BoundingBox& box, std::uint64_t seed) {
  SyntheticFigure out = fig;
  if (count == 0) return out;
  if (!(box.max.x >= box.min.x && box.max.y >= box.min.y)) throw InvalidInput("empty bounding box");
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const Vec2 p{rng.uniform(box.min.x, box.max.x), rng.uniform(box.min.y, box.max.y)};
    const double angle = rng.uniform(0.0, kPi);
    const auto id = static_cast<Index>(out.samples.size());
    out.samples.emplace_back(p, UnorientedTangent::from_angle(angle), id);
    out.provenance.push_back({Provenance::kSpurious, 0.0});
  }
  out.truth = PolyGraph(out.samples.size(), fig.truth.edges());
  return out;
}

TruthDiff compare_to_truth(const PolyGraph& result, const SyntheticFigure& fig) {
  if (result.vertex_count() != fig.samples.size())
    throw InvalidInput("result and figure have different vertex counts");
  TruthDiff diff;
  const auto& got = result.edges();
  const auto& want = fig.truth.edges();
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(diff.missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(diff.extra));

  diff.per_curve.resize(fig.curves.size());
  for (const Edge& e : want) {
    auto& acc = diff.per_curve[static_cast<std::size_t>(fig.provenance[e.a].curve)];
    ++acc.truth_edges;
    if (result.has_edge(e.a, e.b)) ++acc.recovered_edges;
  }
  for (const Edge& e : got) {
    const auto& pa = fig.provenance[e.a];
    const auto& pb = fig.provenance[e.b];
    if (pa.spurious() || pb.spurious()) {
      ++diff.spurious_edges;
    } else if (pa.curve != pb.curve) {
      ++diff.cross_curve_edges;
    }
  }
  return diff;
}

namespace figures {

FigureSpec concentric_circles(Vec2 center, double radius, double delta) {
  FigureSpec spec;
  spec.curves.push_back({Circle{center, radius}, std::nullopt});
  spec.curves.push_back({Circle{center, radius + delta}, std::nullopt});
  return spec;
}

FigureSpec parallel_segments(double length, double delta) {
  FigureSpec spec;
  spec.curves.push_back({Segment{{0, 0}, {length, 0}}, std::nullopt});
  spec.curves.push_back({Segment{{0, delta}, {length, delta}}, std::nullopt});
  return spec;
}

FigureSpec two_closed_curves(std::size_t total) {
  FigureSpec spec;
  const Circle circle{{-0.55, 0.0}, 0.45};
  const Oval oval{{0.5, 0.0}, 0.36, 0.6};
  const double lc = curve::length(circle);
  const double lo = curve::length(oval);
  const auto nc = static_cast<std::size_t>(std::lround(static_cast<double>(total) * lc / (lc + lo)));
  spec.curves.push_back({circle, nc});
  spec.curves.push_back({oval, total - nc});
  return spec;
}

FigureSpec covered_oval() {
  FigureSpec spec;
  spec.curves.push_back({Oval{{0.0, 0.0}, 0.6, 0.4}, std::nullopt});
  spec.curves.push_back({Segment{{-0.8, 0.55}, {0.8, 0.55}}, std::nullopt});
  spec.curves.push_back({Segment{{-0.8, -0.55}, {0.8, -0.55}}, std::nullopt});
  spec.curves.push_back({Segment{{0.75, -0.4}, {0.75, 0.4}}, std::nullopt});
  spec.curves.push_back({Segment{{-0.75, -0.4}, {-0.75, 0.4}}, std::nullopt});
  return spec;
}

FigureSpec circle_grid(std::size_t count, double radius, double pitch) {
  FigureSpec spec;
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  for (std::size_t k = 0; k < count; ++k) {
    const Vec2 c{pitch * static_cast<double>(k % side), pitch * static_cast<double>(k / side)};
    spec.curves.push_back({Circle{c, radius}, std::nullopt});
  }
  return spec;
}

}  // namespace figures

}  // namespace tancurve

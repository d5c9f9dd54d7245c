#include "tancurve/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "tancurve/io.hpp"
#include "tancurve/spatial.hpp"
#include "tancurve/synth.hpp"

namespace tancurve {

PolyGraph proximity_baseline(std::span<const TangentSample> samples) {
  return k_nearest_graph(samples, 2);
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi >= lo) || count == 0) throw InvalidInput("log_spaced needs 0 < lo <= hi");
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = count == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(count - 1);
    out[k] = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
  }
  out.back() = hi;
  return out;
}

LineFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidInput("fit needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

std::string PhaseSweepResult::to_csv() const {
  std::string out = "delta,eps_tangent,eps_baseline\n";
  for (const auto& r : rows)
    out += format_double(r.delta) + ',' + format_double(r.eps_tangent) + ',' + format_double(r.eps_baseline) + '\n';
  return out;
}

namespace {

std::uint64_t trial_seed(const PhaseSweepOptions& opt, double delta, double epsilon, std::size_t trial) {
  // Seeds depend on the cell, not on search order.
  std::uint64_t h = opt.seed * 0x9E3779B97F4A7C15ULL + trial;
  h ^= static_cast<std::uint64_t>(std::llround(std::log(delta) * 1e6)) * 0xC2B2AE3D27D4EB4FULL;
  h ^= static_cast<std::uint64_t>(std::llround(std::log(epsilon) * 1e6)) * 0x165667B19E3779F9ULL;
  return h;
}

double epsilon_cap(const PhaseSweepOptions& opt) { return 0.999 / (opt.kappa_max * std::sqrt(2.0)); }

}  // namespace

bool sweep_trial_exact(SweepMethod method, double delta, double epsilon, const PhaseSweepOptions& opt) {
  const FigureSpec spec = figures::concentric_circles({0.0, 0.0}, opt.radius, delta);
  SamplingOptions so;
  so.fill = opt.fill;
  // Fixed measurement step keeps the figure check cheap at tiny epsilon.
  so.resolution = std::max(epsilon / 16.0, opt.radius * 1e-3);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const SyntheticFigure fig = sample_figure(spec, epsilon, trial_seed(opt, delta, epsilon, t), so);
    PolyGraph g;
    if (method == SweepMethod::tangent) {
      const ZoneParams zp{opt.kappa_max, epsilon, 0.0, 0.0, kDefaultTolerance};
      g = polygonalize(fig.samples, zp, Mode::noise_free, PairSource::quadtree);
    } else {
      g = proximity_baseline(fig.samples);
    }
    if (g != fig.truth) return false;
  }
  return true;
}

double critical_epsilon(SweepMethod method, double delta, const PhaseSweepOptions& opt) {
  double hi = epsilon_cap(opt);
  if (sweep_trial_exact(method, delta, hi, opt)) return hi;
  // Halve until a passing epsilon is found; small epsilon is expensive, so
  // the search approaches it from above.
  double lo = hi;
  const double floor = delta / 64.0;
  do {
    hi = lo;
    lo *= 0.5;
    if (lo < floor) return 0.0;
  } while (!sweep_trial_exact(method, delta, lo, opt));
  while (hi / lo > opt.precision) {
    const double mid = std::sqrt(lo * hi);
    if (sweep_trial_exact(method, delta, mid, opt)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

PhaseSweepResult phase_sweep(const PhaseSweepOptions& opt) {
  if (opt.deltas.empty() || opt.trials == 0) throw InvalidInput("phase sweep needs deltas and trials");
  if (opt.kappa_max * opt.radius < 1.0) throw InvalidInput("kappa_max below the circle curvature");
  PhaseSweepResult res;
  res.rows.resize(opt.deltas.size());
  const std::size_t cells = 2 * opt.deltas.size();
  std::size_t workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, cells);

  // Each cell writes its own slot, so the result does not depend on scheduling.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < cells;) {
      const std::size_t row = c / 2;
      const double d = opt.deltas[row];
      if (c % 2 == 0) {
        res.rows[row].eps_tangent = critical_epsilon(SweepMethod::tangent, d, opt);
      } else {
        res.rows[row].eps_baseline = critical_epsilon(SweepMethod::baseline, d, opt);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<double> d, et, eb;
  for (auto& r : res.rows) {
    r.delta = opt.deltas[static_cast<std::size_t>(&r - res.rows.data())];
    d.push_back(r.delta);
    et.push_back(r.eps_tangent);
    eb.push_back(r.eps_baseline);
  }
  if (d.size() >= 2 && std::all_of(et.begin(), et.end(), [](double v) { return v > 0; }))
    res.tangent = fit_loglog(d, et);
  if (d.size() >= 2 && std::all_of(eb.begin(), eb.end(), [](double v) { return v > 0; }))
    res.baseline = fit_loglog(d, eb);
  return res;
}

std::vector<ScalingRow> scaling_benchmark(std::span<const std::size_t> target_sizes, std::size_t repeats,
                                          std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  constexpr double kRadius = 0.5;
  constexpr double kPitch = 1.5;
  constexpr double kEpsilon = 0.05;
  constexpr double kFill = 0.75;
  const double per_circle = std::ceil(2.0 * 3.141592653589793 * kRadius / (kFill * kEpsilon));

  const ZoneParams zp{2.0 / kRadius, kEpsilon, 0.0, 0.0, kDefaultTolerance};
  // Several seeded variants per size; batches rotate through them so a
  // single replayed input does not flatter the small sizes.
  constexpr std::size_t kVariants = 4;
  std::vector<std::vector<SyntheticFigure>> figs;
  for (std::size_t target : target_sizes) {
    const auto circles =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(target) / per_circle)));
    SamplingOptions so;
    so.fill = kFill;
    auto& variants = figs.emplace_back();
    for (std::size_t v = 0; v < kVariants; ++v) {
      variants.push_back(sample_figure(figures::circle_grid(circles, kRadius, kPitch), kEpsilon, seed + v, so));
      const PolyGraph g = fast_candidate_graph(variants.back().samples, zp, Mode::noise_free);  // warm-up
      if (g.edge_count() < variants.back().truth.edge_count())
        throw InvalidInput("internal: candidate graph lost edges");
    }
  }

  // Sizes are interleaved within each repeat so machine drift hits all of
  // them alike. Each timing is a batch lasting at least kBatchMs, reported
  // per call; single calls at these sizes are too short to time alone.
  constexpr double kBatchMs = 20.0;
  std::vector<double> best(figs.size(), std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
    for (std::size_t f = 0; f < figs.size(); ++f) {
      std::size_t calls = 0;
      double elapsed = 0.0;
      const auto t0 = clock::now();
      do {
        const PolyGraph g = fast_candidate_graph(figs[f][calls % kVariants].samples, zp, Mode::noise_free);
        ++calls;
        elapsed = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      } while (elapsed < kBatchMs);
      best[f] = std::min(best[f], elapsed / static_cast<double>(calls));
    }
  }
  std::vector<ScalingRow> out;
  for (std::size_t f = 0; f < figs.size(); ++f) out.push_back({figs[f].front().samples.size(), best[f]});
  return out;
}

}  // namespace tancurve

// Python bindings. Samples cross the boundary as float arrays of shape
// (N, 4) holding x, y, tx, ty; graphs as int arrays of shape (E, 2).

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tancurve/bench.hpp"
#include "tancurve/denoise.hpp"
#include "tancurve/geom.hpp"
#include "tancurve/graph.hpp"
#include "tancurve/io.hpp"
#include "tancurve/pipeline.hpp"
#include "tancurve/render.hpp"
#include "tancurve/validate.hpp"

namespace py = pybind11;
using namespace tancurve;

namespace {

using SampleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using EdgeArray = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;

std::vector<TangentSample> to_samples(const SampleArray& a) {
  if (a.ndim() != 2 || a.shape(1) != 4) throw InvalidInput("samples must have shape (N, 4)");
  const auto r = a.unchecked<2>();
  std::vector<TangentSample> out;
  out.reserve(static_cast<std::size_t>(r.shape(0)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i) {
    out.emplace_back(Vec2{r(i, 0), r(i, 1)}, UnorientedTangent(Vec2{r(i, 2), r(i, 3)}), static_cast<Index>(i));
  }
  return out;
}

SampleArray from_samples(const std::vector<TangentSample>& s) {
  SampleArray a({static_cast<py::ssize_t>(s.size()), py::ssize_t{4}});
  auto w = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto k = static_cast<py::ssize_t>(i);
    w(k, 0) = s[i].pos.x;
    w(k, 1) = s[i].pos.y;
    w(k, 2) = s[i].tangent.dir().x;
    w(k, 3) = s[i].tangent.dir().y;
  }
  return a;
}

EdgeArray from_graph(const PolyGraph& g) {
  const auto& edges = g.edges();
  EdgeArray a({static_cast<py::ssize_t>(edges.size()), py::ssize_t{2}});
  auto w = a.mutable_unchecked<2>();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    w(static_cast<py::ssize_t>(k), 0) = edges[k].a;
    w(static_cast<py::ssize_t>(k), 1) = edges[k].b;
  }
  return a;
}

PolyGraph to_graph(std::size_t n, const EdgeArray& a) {
  if (a.size() == 0) return PolyGraph(n);
  if (a.ndim() != 2 || a.shape(1) != 2) throw InvalidInput("edges must have shape (E, 2)");
  const auto r = a.unchecked<2>();
  std::vector<Edge> edges;
  for (py::ssize_t k = 0; k < r.shape(0); ++k) {
    if (r(k, 0) < 0 || r(k, 1) < 0) throw InvalidInput("negative edge index");
    edges.push_back(Edge::make(static_cast<Index>(r(k, 0)), static_cast<Index>(r(k, 1))));
  }
  return PolyGraph(n, std::move(edges));
}

Vec2 vec(std::pair<double, double> p) { return {p.first, p.second}; }

Mode mode_of(const std::string& s) {
  if (s == "noise_free") return Mode::noise_free;
  if (s == "noisy") return Mode::noisy;
  throw InvalidInput("mode must be noise_free or noisy");
}

ReconstructionParams make_params(double kappa_max, double epsilon, const std::string& mode, double zeta, double xi,
                                 double alpha, std::size_t sweeps, bool closed, bool strict,
                                 const std::string& pair_source, std::optional<double> rho_max, double tol) {
  ReconstructionParams p;
  p.kappa_max = kappa_max;
  p.epsilon = epsilon;
  p.mode = algorithm_from_string(mode);
  p.zeta = zeta;
  p.xi = xi;
  p.alpha = alpha;
  p.sweeps = sweeps;
  p.closed_figures = closed;
  p.strict_validation = strict;
  p.pair_source = pair_source_from_string(pair_source);
  p.rho_max = rho_max;
  p.tol = tol;
  return p;
}

}  // namespace

PYBIND11_MODULE(_tancurve, m) {
  m.doc() = "Curve reconstruction from points with unoriented tangents";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "in_forbidden_zone",
      [](std::pair<double, double> q, std::pair<double, double> p, std::pair<double, double> m_dir, double kappa_max,
         double tol) { return in_forbidden_zone(vec(q), vec(p), UnorientedTangent(vec(m_dir)), kappa_max, tol); },
      py::arg("q"), py::arg("p"), py::arg("tangent"), py::arg("kappa_max"), py::arg("tol") = kDefaultTolerance);

  m.def(
      "in_allowed_region",
      [](std::pair<double, double> q, std::pair<double, double> p, std::pair<double, double> m_dir, double kappa_max,
         double epsilon, double tol) {
        return in_allowed_region(vec(q), vec(p), UnorientedTangent(vec(m_dir)), {kappa_max, epsilon, 0, 0, tol});
      },
      py::arg("q"), py::arg("p"), py::arg("tangent"), py::arg("kappa_max"), py::arg("epsilon"),
      py::arg("tol") = kDefaultTolerance);

  m.def(
      "candidate_graph",
      [](const SampleArray& a, double kappa_max, double epsilon, const std::string& mode, double zeta, double xi,
         const std::string& pair_source, double tol) {
        const auto s = to_samples(a);
        return from_graph(
            build_candidate_graph(s, {kappa_max, epsilon, zeta, xi, tol}, mode_of(mode), pair_source_from_string(pair_source)));
      },
      py::arg("samples"), py::arg("kappa_max"), py::arg("epsilon"), py::arg("mode") = "noise_free",
      py::arg("zeta") = 0.0, py::arg("xi") = 0.0, py::arg("pair_source") = "quadtree",
      py::arg("tol") = kDefaultTolerance);

  m.def(
      "reconstruct",
      [](const SampleArray& a, double kappa_max, double epsilon, const std::string& mode, double zeta, double xi,
         double alpha, std::size_t sweeps, bool closed, bool strict, std::optional<double> delta,
         const std::string& pair_source, std::optional<double> rho_max, double tol) {
        const auto s = to_samples(a);
        const auto p =
            make_params(kappa_max, epsilon, mode, zeta, xi, alpha, sweeps, closed, strict, pair_source, rho_max, tol);
        const RunResult r = run_reconstruction(s, p, delta);
        return py::make_tuple(from_graph(r.graph), to_json(r.report, false).dump());
      },
      py::arg("samples"), py::arg("kappa_max"), py::arg("epsilon"), py::arg("mode") = "noise_free",
      py::arg("zeta") = 0.0, py::arg("xi") = 0.0, py::arg("alpha") = 1.1, py::arg("sweeps") = 4,
      py::arg("closed") = true, py::arg("strict") = false, py::arg("delta") = py::none(),
      py::arg("pair_source") = "quadtree", py::arg("rho_max") = py::none(), py::arg("tol") = kDefaultTolerance);

  m.def(
      "validate",
      [](double kappa_max, double epsilon, const std::string& mode, double zeta, double xi, std::optional<double> delta,
         bool strict) {
        const auto p = make_params(kappa_max, epsilon, mode, zeta, xi, 1.1, 4, true, strict, "quadtree", std::nullopt,
                                   kDefaultTolerance);
        return to_json(validate(p, delta)).dump();
      },
      py::arg("kappa_max"), py::arg("epsilon"), py::arg("mode") = "noise_free", py::arg("zeta") = 0.0,
      py::arg("xi") = 0.0, py::arg("delta") = py::none(), py::arg("strict") = false);

  m.def(
      "proximity_baseline", [](const SampleArray& a) { return from_graph(proximity_baseline(to_samples(a))); },
      py::arg("samples"));

  m.def(
      "generate_figure",
      [](const std::string& config_json) {
        const FigureConfig cfg = figure_config_from_json(nlohmann::json::parse(config_json));
        const SyntheticFigure fig = generate_figure(cfg);
        return py::make_tuple(from_samples(fig.samples), from_graph(fig.truth), figure_to_json(fig, cfg).dump());
      },
      py::arg("config_json"));

  m.def(
      "parse_samples",
      [](const std::string& text, const std::string& format) {
        const auto s = format == "json" ? parse_samples_json(nlohmann::json::parse(text)) : parse_samples_csv(text);
        return from_samples(s);
      },
      py::arg("text"), py::arg("format") = "csv");

  m.def(
      "render_svg",
      [](const SampleArray& a, const EdgeArray& edges, double size_px, double ticks) {
        const auto s = to_samples(a);
        return render_svg(s, to_graph(s.size(), edges), {size_px, ticks, 2.0});
      },
      py::arg("samples"), py::arg("edges"), py::arg("size_px") = 800.0, py::arg("tangent_ticks") = 0.0);
}

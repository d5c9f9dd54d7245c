#include "tancurve/render.hpp"

#include <algorithm>
#include <cstdio>

namespace tancurve {

namespace {

// Fixed precision keeps the output stable across platforms.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(std::span<const TangentSample> samples, const PolyGraph& graph,
                       const RenderOptions& opt, const RenderTruth& truth) {
  if (graph.vertex_count() != samples.size()) throw InvalidInput("graph does not match samples");
  const double size = opt.size_px;
  const double margin = 0.05 * size;

  Vec2 lo{0.0, 0.0}, hi{1.0, 1.0};
  if (!samples.empty()) {
    const BoundingBox b = bounding_box(samples);
    lo = b.min;
    hi = b.max;
  }
  const double extent = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
  const double scale = (size - 2.0 * margin) / extent;
  // y axis flipped so the picture reads in mathematical orientation.
  auto X = [&](double x) { return num(margin + (x - lo.x) * scale); };
  auto Y = [&](double y) { return num(size - margin - (y - lo.y) * scale); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) + "\" height=\"" + num(size) +
         "\" viewBox=\"0 0 " + num(size) + " " + num(size) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto line = [&](Vec2 a, Vec2 b, const char* cls) {
    out += "<line class=\"" + std::string(cls) + "\" x1=\"" + X(a.x) + "\" y1=\"" + Y(a.y) + "\" x2=\"" +
           X(b.x) + "\" y2=\"" + Y(b.y) + "\"/>\n";
  };

  out += "<style>line.edge{stroke:#1f4e9c;stroke-width:1.5}"
         "line.incorrect{stroke:#d62728;stroke-width:2}"
         "line.missing{stroke:#888;stroke-width:1;stroke-dasharray:4 3}"
         "line.tick{stroke:#2ca02c;stroke-width:1}"
         "circle.sample{fill:#000}circle.spurious{fill:#ff7f0e}</style>\n";

  out += "<g id=\"edges\">\n";
  for (const Edge& e : graph.edges()) {
    const bool wrong = truth.truth && !truth.truth->has_edge(e.a, e.b);
    line(samples[e.a].pos, samples[e.b].pos, wrong ? "incorrect" : "edge");
  }
  if (truth.truth) {
    for (const Edge& e : truth.truth->edges())
      if (!graph.has_edge(e.a, e.b)) line(samples[e.a].pos, samples[e.b].pos, "missing");
  }
  out += "</g>\n";

  if (opt.tangent_ticks > 0.0) {
    out += "<g id=\"tangents\">\n";
    const double h = opt.tangent_ticks * extent;
    for (const auto& s : samples) {
      const Vec2 d = s.tangent.dir() * h;
      line(s.pos - d, s.pos + d, "tick");
    }
    out += "</g>\n";
  }

  out += "<g id=\"samples\">\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const bool spurious = i < truth.provenance.size() && truth.provenance[i].spurious();
    out += "<circle class=\"" + std::string(spurious ? "spurious" : "sample") + "\" cx=\"" +
           X(samples[i].pos.x) + "\" cy=\"" + Y(samples[i].pos.y) + "\" r=\"" + num(opt.dot_radius_px) +
           "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace tancurve

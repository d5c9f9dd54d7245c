#include "tancurve/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tancurve {

using nlohmann::json;

FormatError::FormatError(const std::string& what, std::size_t line_number)
    : std::runtime_error(line_number ? "line " + std::to_string(line_number) + ": " + what : what),
      line(line_number) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end || field.empty()) return std::nullopt;
  return v;
}

TangentSample make_sample(double x, double y, double tx, double ty, std::size_t id,
                          std::size_t line) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(tx) || !std::isfinite(ty))
    throw FormatError("non-finite value", line);
  if (tx == 0.0 && ty == 0.0) throw FormatError("zero tangent vector", line);
  return TangentSample({x, y}, UnorientedTangent({tx, ty}), static_cast<Index>(id));
}

double number_field(const json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    throw FormatError("sample " + std::to_string(index) + ": missing numeric field '" + key + "'");
  return it->get<double>();
}

Vec2 vec_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError(std::string(what) + " must be a [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vec_to_json(Vec2 v) { return json::array({v.x, v.y}); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

SampleFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".csv" || ext == ".txt") return SampleFormat::csv;
  if (ext == ".json") return SampleFormat::json;
  throw FormatError("cannot infer sample format from '" + path.string() + "'");
}

std::vector<TangentSample> parse_samples_csv(std::string_view text) {
  std::vector<TangentSample> out;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
        static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF) {
      line.remove_prefix(3);
    }

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    std::optional<double> values[4];
    bool numeric = fields.size() == 4;
    for (std::size_t k = 0; numeric && k < 4; ++k) {
      values[k] = parse_number(fields[k]);
      numeric = values[k].has_value();
    }
    if (!numeric) {
      const bool header_like = !seen_content && fields.size() == 4 &&
                               std::none_of(fields.begin(), fields.end(), [](std::string_view f) {
                                 return parse_number(f).has_value();
                               });
      if (header_like) {
        seen_content = true;
        continue;
      }
      throw FormatError("expected 4 numeric fields x,y,tx,ty", line_no);
    }
    seen_content = true;
    out.push_back(make_sample(*values[0], *values[1], *values[2], *values[3], out.size(), line_no));
  }
  return out;
}

std::vector<TangentSample> parse_samples_json(const json& doc) {
  const json* arr = &doc;
  if (doc.is_object()) {
    auto it = doc.find("samples");
    if (it == doc.end()) throw FormatError("JSON document has no 'samples' array");
    arr = &*it;
  }
  if (!arr->is_array()) throw FormatError("'samples' must be an array");
  std::vector<TangentSample> out;
  out.reserve(arr->size());
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const json& s = (*arr)[i];
    if (!s.is_object()) throw FormatError("sample " + std::to_string(i) + " is not an object");
    const double x = number_field(s, "x", i);
    const double y = number_field(s, "y", i);
    const double tx = number_field(s, "tx", i);
    const double ty = number_field(s, "ty", i);
    try {
      out.push_back(make_sample(x, y, tx, ty, i, 0));
    } catch (const FormatError& e) {
      throw FormatError("sample " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::vector<TangentSample> parse_samples(const std::filesystem::path& path, SampleFormat format) {
  if (format == SampleFormat::csv) return parse_samples_csv(read_text_file(path));
  return parse_samples_json(read_json_file(path));
}

std::string write_samples_csv(const std::vector<TangentSample>& samples) {
  std::string out = "x,y,tx,ty\n";
  for (const auto& s : samples) {
    const Vec2 t = s.tangent.dir();
    out += format_double(s.pos.x) + ',' + format_double(s.pos.y) + ',' + format_double(t.x) + ',' +
           format_double(t.y) + '\n';
  }
  return out;
}

json samples_to_json(const std::vector<TangentSample>& samples) {
  json arr = json::array();
  for (const auto& s : samples) {
    const Vec2 t = s.tangent.dir();
    arr.push_back({{"x", s.pos.x}, {"y", s.pos.y}, {"tx", t.x}, {"ty", t.y}});
  }
  return arr;
}

json graph_to_json(const std::vector<TangentSample>& samples, const PolyGraph& g) {
  json vertices = json::array();
  for (const auto& s : samples) {
    const Vec2 t = s.tangent.dir();
    vertices.push_back({{"id", s.id}, {"x", s.pos.x}, {"y", s.pos.y}, {"tx", t.x}, {"ty", t.y}});
  }
  json edges = json::array();
  std::vector<Edge> by_id;
  by_id.reserve(g.edge_count());
  for (const Edge& e : g.edges()) by_id.push_back(Edge::make(samples[e.a].id, samples[e.b].id));
  std::sort(by_id.begin(), by_id.end());
  for (const Edge& e : by_id) edges.push_back(json::array({e.a, e.b}));
  return {{"vertices", vertices}, {"edges", edges}};
}

std::pair<std::vector<TangentSample>, PolyGraph> graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw FormatError("graph JSON needs 'vertices' and 'edges'");
  std::vector<TangentSample> samples;
  const json& vs = doc.at("vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const json& v = vs[i];
    auto s = make_sample(number_field(v, "x", i), number_field(v, "y", i), number_field(v, "tx", i),
                         number_field(v, "ty", i), i, 0);
    if (v.contains("id")) {
      if (!v["id"].is_number_unsigned() || v["id"].get<std::size_t>() != i)
        throw FormatError("vertex " + std::to_string(i) + " must have id " + std::to_string(i));
    }
    samples.push_back(s);
  }
  std::vector<Edge> edges;
  for (const json& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw FormatError("edges must be [i, j] pairs of vertex ids");
    edges.push_back({e[0].get<Index>(), e[1].get<Index>()});
  }
  try {
    return {std::move(samples), PolyGraph(samples.size(), std::move(edges))};
  } catch (const InvalidInput& ex) {
    throw FormatError(ex.what());
  }
}

namespace {

CurveShape curve_from_json(const json& c) {
  const std::string type = c.value("type", "");
  auto num = [&](const char* key) {
    if (!c.contains(key) || !c[key].is_number())
      throw FormatError(type + " curve needs numeric '" + key + "'");
    return c[key].get<double>();
  };
  CurveShape shape;
  if (type == "circle") {
    shape = Circle{vec_from_json(c.at("center"), "center"), num("radius")};
  } else if (type == "segment") {
    shape = Segment{vec_from_json(c.at("from"), "from"), vec_from_json(c.at("to"), "to")};
  } else if (type == "arc") {
    shape = Arc{vec_from_json(c.at("center"), "center"), num("radius"), num("start_angle"), num("sweep")};
  } else if (type == "oval") {
    shape = Oval{vec_from_json(c.at("center"), "center"), num("half_width"), num("half_height")};
  } else {
    throw FormatError("unknown curve type '" + type + "'");
  }
  try {
    curve::check(shape);
  } catch (const InvalidInput& e) {
    throw FormatError(e.what());
  }
  return shape;
}

json curve_to_json(const CurveShape& shape) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return {{"type", "circle"}, {"center", vec_to_json(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, Segment>) {
          return {{"type", "segment"}, {"from", vec_to_json(s.from)}, {"to", vec_to_json(s.to)}};
        } else if constexpr (std::is_same_v<T, Arc>) {
          return {{"type", "arc"},          {"center", vec_to_json(s.center)},
                  {"radius", s.radius},     {"start_angle", s.start_angle},
                  {"sweep", s.sweep}};
        } else {
          return {{"type", "oval"},
                  {"center", vec_to_json(s.center)},
                  {"half_width", s.half_width},
                  {"half_height", s.half_height}};
        }
      },
      shape);
}

}  // namespace

FigureConfig figure_config_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array())
    throw FormatError("figure spec needs a 'curves' array");
  FigureConfig cfg;
  try {
    for (const json& c : doc["curves"]) {
      CurveSpec cs{curve_from_json(c), std::nullopt};
      if (c.contains("samples")) cs.samples = c["samples"].get<std::size_t>();
      cfg.spec.curves.push_back(cs);
    }
    if (doc.contains("kappa_max")) cfg.spec.kappa_max = doc["kappa_max"].get<double>();
    if (doc.contains("delta")) cfg.spec.delta = doc["delta"].get<double>();
    cfg.epsilon = doc.value("epsilon", cfg.epsilon);
    cfg.seed = doc.value("seed", cfg.seed);
    if (doc.contains("sampling")) {
      const json& s = doc["sampling"];
      cfg.sampling.fill = s.value("fill", cfg.sampling.fill);
      cfg.sampling.jitter = s.value("jitter", cfg.sampling.jitter);
      cfg.sampling.resolution = s.value("resolution", cfg.sampling.resolution);
    }
    if (doc.contains("noise")) {
      cfg.zeta = doc["noise"].value("zeta", 0.0);
      cfg.xi = doc["noise"].value("xi", 0.0);
    }
    if (doc.contains("spurious")) {
      const json& s = doc["spurious"];
      cfg.spurious = s.value("count", std::size_t{0});
      if (s.contains("bbox")) {
        const json& b = s["bbox"];
        if (!b.is_array() || b.size() != 4) throw FormatError("spurious bbox must be [xmin, ymin, xmax, ymax]");
        cfg.spurious_box = BoundingBox{{b[0].get<double>(), b[1].get<double>()},
                                       {b[2].get<double>(), b[3].get<double>()}};
      }
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("figure spec: ") + e.what());
  }
  cfg.sampling.zeta = cfg.zeta;
  cfg.sampling.xi = cfg.xi;
  return cfg;
}

json figure_spec_to_json(const FigureSpec& spec) {
  json curves = json::array();
  for (const auto& c : spec.curves) {
    json j = curve_to_json(c.shape);
    if (c.samples) j["samples"] = *c.samples;
    curves.push_back(j);
  }
  json doc = {{"curves", curves}};
  if (spec.kappa_max) doc["kappa_max"] = *spec.kappa_max;
  if (spec.delta) doc["delta"] = *spec.delta;
  return doc;
}

SyntheticFigure generate_figure(const FigureConfig& config) {
  SyntheticFigure fig = sample_figure(config.spec, config.epsilon, config.seed, config.sampling);
  fig = inject_noise(fig, config.zeta, config.xi, config.seed ^ 0x9E3779B97F4A7C15ULL);
  if (config.spurious > 0) {
    BoundingBox box = config.spurious_box.value_or(bounding_box(fig.samples));
    fig = inject_spurious(fig, config.spurious, box, config.seed ^ 0xD1B54A32D192ED03ULL);
  }
  return fig;
}

json figure_to_json(const SyntheticFigure& fig, const FigureConfig& config) {
  json params = {{"epsilon", fig.epsilon}, {"zeta", config.zeta}, {"xi", config.xi}};
  params["kappa_max"] = config.spec.kappa_max.value_or(fig.kappa_max_actual);
  const double delta = config.spec.delta.value_or(fig.min_separation_actual);
  if (std::isfinite(delta)) params["delta"] = delta;

  json truth = json::array();
  for (const Edge& e : fig.truth.edges()) truth.push_back(json::array({e.a, e.b}));
  json prov = json::array();
  for (const auto& p : fig.provenance) prov.push_back({{"curve", p.curve}, {"t", p.t}});

  json measured = {{"kappa_max", fig.kappa_max_actual},
                   {"resolution", fig.measurement_resolution},
                   {"max_arc_gap", fig.max_arc_gap},
                   {"min_arc_gap", fig.min_arc_gap}};
  if (std::isfinite(fig.min_separation_actual)) measured["delta"] = fig.min_separation_actual;

  json spec = figure_spec_to_json(config.spec);
  return {{"params", params},   {"samples", samples_to_json(fig.samples)},
          {"truth", truth},     {"provenance", prov},
          {"figure", spec},     {"measured", measured},
          {"seed", config.seed}};
}

std::optional<TruthData> truth_from_json(const json& doc, std::size_t sample_count) {
  if (!doc.is_object() || !doc.contains("truth")) return std::nullopt;
  TruthData data;
  std::vector<Edge> edges;
  try {
    for (const json& e : doc["truth"]) edges.push_back({e.at(0).get<Index>(), e.at(1).get<Index>()});
    data.truth = PolyGraph(sample_count, std::move(edges));
    if (doc.contains("provenance")) {
      for (const json& p : doc["provenance"]) {
        Provenance pv{p.at("curve").get<std::int32_t>(), p.value("t", 0.0)};
        data.curve_count = std::max<std::size_t>(data.curve_count, static_cast<std::size_t>(pv.curve + 1));
        data.provenance.push_back(pv);
      }
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("truth block: ") + e.what());
  } catch (const InvalidInput& e) {
    throw FormatError(std::string("truth block: ") + e.what());
  }
  if (data.provenance.size() != sample_count) {
    data.provenance.assign(sample_count, Provenance{0, 0.0});
    data.curve_count = std::max<std::size_t>(data.curve_count, 1);
  }
  return data;
}

json read_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

}  // namespace tancurve

#pragma once

/// \file
/// \brief Sample, graph and figure file formats.
///
/// Samples are CSV rows `x,y,tx,ty` (optional header) or a JSON document
/// `{"params": {...}, "samples": [{"x":..,"y":..,"tx":..,"ty":..}, ...]}`.
/// Row order defines sample ids. Tangents are normalized and sign-canonicalized
/// on read.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tancurve/geom.hpp"
#include "tancurve/graph.hpp"
#include "tancurve/synth.hpp"

namespace tancurve {

/// Malformed input file. `line` is 1-based, 0 when not applicable.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0);
  std::size_t line;
};

enum class SampleFormat { csv, json };

/// csv for ".csv"/".txt", json for ".json"; throws FormatError otherwise.
SampleFormat format_from_path(const std::filesystem::path& path);

std::vector<TangentSample> parse_samples_csv(std::string_view text);
std::vector<TangentSample> parse_samples_json(const nlohmann::json& doc);
std::vector<TangentSample> parse_samples(const std::filesystem::path& path, SampleFormat format);

std::string write_samples_csv(const std::vector<TangentSample>& samples);
nlohmann::json samples_to_json(const std::vector<TangentSample>& samples);

/// `{"vertices":[{id,x,y,tx,ty}...], "edges":[[i,j]...]}`, edges sorted.
nlohmann::json graph_to_json(const std::vector<TangentSample>& samples, const PolyGraph& g);
/// Inverse of graph_to_json.
std::pair<std::vector<TangentSample>, PolyGraph> graph_from_json(const nlohmann::json& doc);

/// Figure spec config: curves plus optional declared bounds and generation
/// settings (see README for the schema).
struct FigureConfig {
  FigureSpec spec;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  SamplingOptions sampling;
  double zeta = 0.0;
  double xi = 0.0;
  std::size_t spurious = 0;
  std::optional<BoundingBox> spurious_box;
};

FigureConfig figure_config_from_json(const nlohmann::json& doc);
nlohmann::json figure_spec_to_json(const FigureSpec& spec);

/// Generates the figure a config describes, including noise and spurious
/// points.
SyntheticFigure generate_figure(const FigureConfig& config);

/// Figure file: samples, params block, truth edges and provenance.
nlohmann::json figure_to_json(const SyntheticFigure& fig, const FigureConfig& config);

/// Truth and provenance read back from a figure file, when present.
struct TruthData {
  PolyGraph truth;
  std::vector<Provenance> provenance;
  std::size_t curve_count = 0;
};
std::optional<TruthData> truth_from_json(const nlohmann::json& doc, std::size_t sample_count);

nlohmann::json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace tancurve

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mirrorcalc/pipeline.hpp"

namespace mirrorcalc::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);

struct EmitSet {
  bool kd = true;
  bool nd = true;
  bool mirror_map = true;
  bool f_series = false;
  bool checks = true;
};
// comma-separated subset of kd, nd, mirror-map, f-series, checks
EmitSet parse_emit(const std::string& s);

struct RenderOptions {
  Format format = Format::Text;
  EmitSet emit;
  std::optional<int> decimal;
};

std::string render_result(const PipelineResult& r, const RenderOptions& opt);

// Lossless form used by the cache.
nlohmann::ordered_json result_to_json(const PipelineResult& r);
PipelineResult result_from_json(const nlohmann::json& j);

}  // namespace mirrorcalc::cli

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "lzc/metrics.hpp"

namespace lzc {

// Where a report came from: a file path or generator spec, plus the window
// index when windowing is on.
struct Source {
  std::string path;
  std::optional<std::size_t> window;

  friend bool operator==(const Source&, const Source&) = default;
};

enum class OutputFormat { kJson, kCsv };

// Reals are written with 6 significant digits.
double round_significant(double x);

// One JSON object, keys in fixed order, no trailing newline.
nlohmann::ordered_json report_to_json(const MetricReport& report, const Source& source);
std::string emit_json(const MetricReport& report, const Source& source);
std::string emit_error_json(const Source& source, const std::string& message);

// Parses an object produced by report_to_json. Throws lzc::Error on
// missing or mistyped fields.
MetricReport report_from_json(const nlohmann::json& j, Source* source = nullptr);

// CSV columns are fixed by q_max so that every row of a run shares one
// header; orders a report lacks are left empty.
std::string csv_header(std::size_t q_max);
std::string emit_csv(const MetricReport& report, const Source& source, std::size_t q_max);

}  // namespace lzc

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lzc/error.hpp"
#include "lzc/process.hpp"
#include "lzc/report_io.hpp"
#include "lzc/sequence.hpp"

namespace lzc::cli {

// Contradictory or malformed run configuration; aborts the whole run.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class InputFormat { kSymbols, kCsv };

struct Digitizer {
  enum class Kind { kNone, kMedian, kQuantiles };
  Kind kind = Kind::kNone;
  std::size_t levels = 2;
};

struct RunConfig {
  std::optional<std::filesystem::path> input;
  std::optional<std::string> generate;
  InputFormat format = InputFormat::kSymbols;
  std::string column = "0";
  // Unset: median for csv input, none otherwise.
  std::optional<Digitizer> digitizer;
  std::optional<std::size_t> alphabet_size;
  std::optional<std::size_t> window;
  std::size_t q_max = 4;
  std::size_t surrogates = 10;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::kJson;
  std::optional<std::filesystem::path> output;
};

struct GeneratorRequest {
  ProcessSpec spec;
  std::size_t n = 0;
};

// "median", "none" or "quantiles:K".
Digitizer parse_digitizer(const std::string& text);

// Generator mini-syntax, e.g. "bernoulli:p=0.5,n=100000" or
// "markov-file:table.csv,n=1000". `alphabet_size` overrides the inferred
// alphabet of periodic and constant sources.
GeneratorRequest parse_generator(const std::string& text,
                                 std::optional<std::size_t> alphabet_size = std::nullopt);

// Transition table CSV: A^m rows of A probabilities; '#' starts a comment.
MarkovProcess read_markov_table(const std::filesystem::path& path);

// Symbol text: '0'-'9' then 'a'-'z' name symbols 0..35; whitespace is ignored.
SymbolSequence parse_symbols(const std::string& text, std::size_t alphabet_size);

// One numeric column of CSV text. `column` is a 0-based index or a header
// name; a header row is detected by a non-numeric selected cell in the first
// row.
NumericSeries parse_csv_column(const std::string& text, const std::string& column);

// Throws ConfigError on contradictions.
void validate(const RunConfig& config);

struct RunSummary {
  std::size_t reports = 0;
  std::size_t errors = 0;
  std::size_t dropped_windows = 0;
  std::size_t dropped_samples = 0;
};

// Analyzes every unit and writes one record per unit (JSON lines or CSV) to
// `out`. Per-unit failures are recorded and the run continues. Returns 0 on
// full success, 1 if any unit failed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err, RunSummary* summary = nullptr);

// Parses flags and runs. Exit status 2 on configuration errors.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lzc::cli

#include "lzc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lzc/metrics.hpp"

namespace lzc::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMaxTextSymbols = 36;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<double> to_double(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

template <class Int>
Int to_integer(const std::string& s, const char* what) {
  const std::string t = trim(s);
  Int v{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(std::string("invalid ") + what + ": '" + s + "'");
  }
  return v;
}

std::optional<Symbol> symbol_of(char ch) {
  if (ch >= '0' && ch <= '9') return static_cast<Symbol>(ch - '0');
  if (ch >= 'a' && ch <= 'z') return static_cast<Symbol>(ch - 'a' + 10);
  return std::nullopt;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error("error while reading " + path.string());
  return os.str();
}

std::vector<Symbol> pattern_symbols(const std::string& text) {
  std::vector<Symbol> out;
  for (char ch : text) {
    const auto s = symbol_of(ch);
    if (!s) throw ConfigError(std::string("invalid pattern symbol '") + ch + "'");
    out.push_back(*s);
  }
  return out;
}

// A unit's data before windowing.
using Payload = std::variant<SymbolSequence, NumericSeries>;

struct Unit {
  std::string name;
  std::optional<fs::path> path;
};

std::size_t payload_length(const Payload& p) {
  return std::visit([](const auto& v) { return v.size(); }, p);
}

Payload slice(const Payload& p, std::size_t begin, std::size_t length) {
  if (const auto* seq = std::get_if<SymbolSequence>(&p)) {
    const auto d = seq->data().subspan(begin, length);
    return SymbolSequence(seq->alphabet(), std::vector<Symbol>(d.begin(), d.end()));
  }
  const auto d = std::get<NumericSeries>(p).samples().subspan(begin, length);
  return NumericSeries(std::vector<double>(d.begin(), d.end()));
}

SymbolSequence digitize(const Payload& p, const Digitizer& digitizer) {
  if (const auto* seq = std::get_if<SymbolSequence>(&p)) return *seq;
  const auto& series = std::get<NumericSeries>(p);
  if (digitizer.kind == Digitizer::Kind::kQuantiles) return digitize_quantiles(series, digitizer.levels);
  return binarize_median(series);
}

Digitizer effective_digitizer(const RunConfig& c) {
  if (c.digitizer) return *c.digitizer;
  if (!c.generate && c.format == InputFormat::kCsv) return {Digitizer::Kind::kMedian, 2};
  return {};
}

std::vector<Unit> enumerate_units(const RunConfig& c) {
  if (c.generate) return {Unit{*c.generate, std::nullopt}};
  const fs::path& root = *c.input;
  std::error_code ec;
  if (fs::is_directory(root, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root)) {
      if (!entry.is_regular_file()) continue;
      if (entry.path().filename().string().starts_with('.')) continue;
      files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<Unit> units;
    units.reserve(files.size());
    for (const auto& f : files) units.push_back(Unit{f.string(), f});
    return units;
  }
  return {Unit{root.string(), root}};
}

Payload load(const Unit& unit, const RunConfig& c) {
  if (!unit.path) {
    const auto req = parse_generator(*c.generate, c.alphabet_size);
    return generate(req.spec, req.n, c.seed);
  }
  const std::string text = read_file(*unit.path);
  if (c.format == InputFormat::kCsv) return parse_csv_column(text, c.column);
  return parse_symbols(text, c.alphabet_size.value_or(2));
}

}  // namespace

Digitizer parse_digitizer(const std::string& text) {
  if (text == "none") return {Digitizer::Kind::kNone, 2};
  if (text == "median") return {Digitizer::Kind::kMedian, 2};
  if (text.starts_with("quantiles:")) {
    const auto k = to_integer<std::size_t>(text.substr(10), "quantile level count");
    if (k < 2) throw ConfigError("quantile digitizer needs at least 2 levels");
    return {Digitizer::Kind::kQuantiles, k};
  }
  throw ConfigError("unknown digitizer '" + text + "' (expected median, quantiles:K or none)");
}

GeneratorRequest parse_generator(const std::string& text, std::optional<std::size_t> alphabet_size) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("generator spec needs 'kind:params': " + text);
  const std::string kind = text.substr(0, colon);
  auto items = split(std::string_view(text).substr(colon + 1), ',');

  std::optional<std::string> file;
  if (kind == "markov-file" && !items.empty() && items.front().find('=') == std::string::npos) {
    file = trim(items.front());
    items.erase(items.begin());
  }
  std::map<std::string, std::string> params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("generator parameter needs key=value: '" + item + "'");
    const auto key = trim(item.substr(0, eq));
    if (!params.emplace(key, trim(item.substr(eq + 1))).second) {
      throw ConfigError("duplicate generator parameter '" + key + "'");
    }
  }
  auto take = [&](const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) throw ConfigError(kind + " generator needs '" + key + "='");
    std::string v = it->second;
    params.erase(it);
    return v;
  };
  auto take_probability = [&](const std::string& key) {
    const auto v = to_double(take(key));
    if (!v || !(*v >= 0.0 && *v <= 1.0)) throw ConfigError(key + " must be a probability in [0, 1]");
    return *v;
  };
  auto inferred_alphabet = [&](const std::vector<Symbol>& symbols) {
    Symbol top = 0;
    for (Symbol s : symbols) top = std::max(top, s);
    return alphabet_size.value_or(std::max<std::size_t>(2, top + 1));
  };

  GeneratorRequest req;
  req.n = to_integer<std::size_t>(take("n"), "generator length n");
  if (req.n < 1) throw ConfigError("generator length n must be >= 1");

  if (kind == "bernoulli") {
    req.spec = BernoulliProcess{take_probability("p")};
  } else if (kind == "markov") {
    req.spec = MarkovProcess::symmetric_binary(take_probability("eps"));
  } else if (kind == "markov-file") {
    if (!file) throw ConfigError("markov-file generator needs a table path");
    req.spec = read_markov_table(*file);
  } else if (kind == "periodic") {
    auto pattern = pattern_symbols(take("pattern"));
    if (pattern.empty()) throw ConfigError("periodic pattern is empty");
    const auto a = inferred_alphabet(pattern);
    req.spec = PeriodicProcess{std::move(pattern), a};
  } else if (kind == "constant") {
    const auto symbol = pattern_symbols(take("symbol"));
    if (symbol.size() != 1) throw ConfigError("constant generator needs a single symbol");
    req.spec = ConstantProcess{symbol.front(), inferred_alphabet(symbol)};
  } else {
    throw ConfigError("unknown generator kind '" + kind + "'");
  }
  if (!params.empty()) throw ConfigError("unknown generator parameter '" + params.begin()->first + "'");
  try {
    lzc::validate(req.spec);
  } catch (const InvalidParameterError& e) {
    throw ConfigError(e.what());
  }
  return req;
}

MarkovProcess read_markov_table(const fs::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  MarkovProcess m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) {
      const auto v = to_double(cell);
      if (!v) throw ConfigError("non-numeric transition probability '" + trim(cell) + "'");
      row.push_back(*v);
    }
    m.transitions.push_back(std::move(row));
  }
  if (m.transitions.empty()) throw ConfigError("transition table " + path.string() + " is empty");
  m.alphabet_size = m.transitions.front().size();
  if (m.alphabet_size < 2) throw ConfigError("transition table needs at least 2 columns");
  // rows = A^order
  std::size_t rows = 1;
  m.order = 0;
  while (rows < m.transitions.size()) {
    rows *= m.alphabet_size;
    ++m.order;
  }
  if (rows != m.transitions.size() || m.order == 0) {
    throw ConfigError("transition table row count " + std::to_string(m.transitions.size()) +
                      " is not a positive power of " + std::to_string(m.alphabet_size));
  }
  return m;
}

SymbolSequence parse_symbols(const std::string& text, std::size_t alphabet_size) {
  const Alphabet alphabet(alphabet_size);
  std::vector<Symbol> data;
  data.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
    const auto s = symbol_of(ch);
    if (!s || !alphabet.contains(*s)) {
      throw InvalidParameterError("character '" + std::string(1, ch) + "' at offset " +
                                  std::to_string(i) + " is not a symbol of an alphabet of size " +
                                  std::to_string(alphabet_size));
    }
    data.push_back(*s);
  }
  if (data.empty()) throw EmptyInputError("no symbols in input");
  return SymbolSequence(alphabet, std::move(data));
}

NumericSeries parse_csv_column(const std::string& text, const std::string& column) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.empty()) throw EmptyInputError("no rows in CSV input");

  const bool by_index = !column.empty() && std::all_of(column.begin(), column.end(),
                                                       [](char ch) { return ch >= '0' && ch <= '9'; });
  std::size_t col = 0;
  bool header = false;
  if (by_index) {
    col = std::stoul(column);
    header = col < rows.front().size() && !to_double(rows.front()[col]);
  } else {
    header = true;
    const auto& names = rows.front();
    const auto it = std::find_if(names.begin(), names.end(),
                                 [&](const std::string& name) { return trim(name) == column; });
    if (it == names.end()) throw InvalidParameterError("CSV has no column named '" + column + "'");
    col = static_cast<std::size_t>(it - names.begin());
  }

  std::vector<double> samples;
  samples.reserve(rows.size());
  for (std::size_t r = header ? 1 : 0; r < rows.size(); ++r) {
    if (col >= rows[r].size()) {
      throw InvalidParameterError("CSV row " + std::to_string(r + 1) + " has no column " +
                                  std::to_string(col));
    }
    const auto v = to_double(rows[r][col]);
    if (!v) {
      throw InvalidParameterError("unparsable sample '" + trim(rows[r][col]) + "' on CSV row " +
                                  std::to_string(r + 1));
    }
    samples.push_back(*v);
  }
  return NumericSeries(std::move(samples));
}

void validate(const RunConfig& c) {
  if (c.input.has_value() == c.generate.has_value()) {
    throw ConfigError("exactly one of --input or --generate is required");
  }
  if (c.window && *c.window < 2) throw ConfigError("--window must be at least 2");
  if (c.q_max < 1 || c.q_max > kMaxEntropyOrder) {
    throw ConfigError("--qmax must lie in [1, " + std::to_string(kMaxEntropyOrder) + "]");
  }
  if (c.alphabet_size && *c.alphabet_size < 2) throw ConfigError("--alphabet-size must be at least 2");

  const Digitizer d = effective_digitizer(c);
  const bool symbolic = c.generate || c.format == InputFormat::kSymbols;
  if (symbolic && d.kind != Digitizer::Kind::kNone) {
    throw ConfigError("symbol and generator inputs are already digitized; use --digitizer none");
  }
  if (!symbolic && d.kind == Digitizer::Kind::kNone) {
    throw ConfigError("--digitizer none requires symbol-format input");
  }
  if (c.format == InputFormat::kSymbols && !c.generate && c.alphabet_size &&
      *c.alphabet_size > kMaxTextSymbols) {
    throw ConfigError("symbol files support alphabets of at most 36 symbols");
  }
  if (c.generate) parse_generator(*c.generate, c.alphabet_size);
  if (c.input) {
    std::error_code ec;
    if (!fs::exists(*c.input, ec)) throw ConfigError("input " + c.input->string() + " does not exist");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err, RunSummary* summary) {
  validate(config);
  const Digitizer digitizer = effective_digitizer(config);
  RunSummary s;

  if (config.output_format == OutputFormat::kCsv) out << csv_header(config.q_max) << '\n';

  auto emit = [&](const MetricReport& report, const Source& source) {
    if (config.output_format == OutputFormat::kJson) {
      out << emit_json(report, source) << '\n';
    } else {
      out << emit_csv(report, source, config.q_max) << '\n';
    }
    ++s.reports;
  };
  auto fail = [&](const Source& source, const std::string& message) {
    if (config.output_format == OutputFormat::kJson) out << emit_error_json(source, message) << '\n';
    err << "error: " << source.path;
    if (source.window) err << " [window " << *source.window << ']';
    err << ": " << message << '\n';
    ++s.errors;
  };

  for (const Unit& unit : enumerate_units(config)) {
    std::optional<Payload> payload;
    try {
      payload = load(unit, config);
    } catch (const std::exception& e) {
      fail(Source{unit.name, std::nullopt}, e.what());
      continue;
    }

    if (!config.window) {
      const Source source{unit.name, std::nullopt};
      try {
        emit(analyze(digitize(*payload, digitizer), config.q_max, config.surrogates, config.seed),
             source);
      } catch (const std::exception& e) {
        fail(source, e.what());
      }
      continue;
    }

    const std::size_t w = *config.window;
    const std::size_t length = payload_length(*payload);
    const std::size_t windows = length / w;
    if (length % w != 0) {
      ++s.dropped_windows;
      s.dropped_samples += length % w;
    }
    for (std::size_t k = 0; k < windows; ++k) {
      const Source source{unit.name, k};
      try {
        const auto seq = digitize(slice(*payload, k * w, w), digitizer);
        emit(analyze(seq, config.q_max, config.surrogates, config.seed + k), source);
      } catch (const std::exception& e) {
        fail(source, e.what());
      }
    }
  }

  out.flush();
  err << "summary: " << s.reports << " reports, " << s.errors << " errors";
  if (config.window) {
    err << ", " << s.dropped_windows << " trailing partial windows dropped (" << s.dropped_samples
        << " samples)";
  }
  err << '\n';
  if (summary) *summary = s;
  return s.errors == 0 ? 0 : 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"LZW complexity metrics for symbol strings and digitized time series"};
  RunConfig config;

  std::string input;
  std::string generate;
  std::string format = "symbols";
  std::string digitizer;
  std::size_t alphabet = 0;
  std::size_t window = 0;
  std::string output;
  std::string output_format = "json";

  auto* in_opt = app.add_option("--input", input, "Input file or directory");
  auto* gen_opt = app.add_option("--generate", generate, "Synthetic source, e.g. bernoulli:p=0.5,n=100000");
  in_opt->excludes(gen_opt);
  app.add_option("--format", format, "Input format")->check(CLI::IsMember({"symbols", "csv"}));
  app.add_option("--column", config.column, "CSV column name or 0-based index");
  app.add_option("--digitizer", digitizer, "median | quantiles:K | none");
  auto* alpha_opt = app.add_option("--alphabet-size", alphabet, "Alphabet size A");
  auto* window_opt = app.add_option("--window", window, "Constant window length; partial tails are dropped");
  app.add_option("--qmax", config.q_max, "Highest conditional entropy order")->capture_default_str();
  app.add_option("--surrogates", config.surrogates, "Shuffled surrogates for rho1 (0 disables)")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for generators and shuffles")->capture_default_str();
  auto* out_opt = app.add_option("--output", output, "Output file (default: standard output)");
  app.add_option("--output-format", output_format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (in_opt->count()) config.input = input;
    if (gen_opt->count()) config.generate = generate;
    config.format = format == "csv" ? InputFormat::kCsv : InputFormat::kSymbols;
    if (!digitizer.empty()) config.digitizer = parse_digitizer(digitizer);
    if (alpha_opt->count()) config.alphabet_size = alphabet;
    if (window_opt->count()) config.window = window;
    config.output_format = output_format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    validate(config);

    if (out_opt->count()) {
      config.output = output;
      std::ofstream file(output, std::ios::binary);
      if (!file) throw ConfigError("cannot open output " + output);
      return run(config, file, err);
    }
    return run(config, out, err);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace lzc::cli

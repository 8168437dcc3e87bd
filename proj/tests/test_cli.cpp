#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lzc/cli.hpp"
#include "lzc/error.hpp"

using namespace lzc;
using namespace lzc::cli;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory under the system temp dir.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name) : path_(fs::temp_directory_path() / ("lzc_test_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

  fs::path write(const std::string& file, const std::string& text) const {
    const auto p = path_ / file;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

 private:
  fs::path path_;
};

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "lzc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_symbols") {
  const auto s = parse_symbols("01 10\n", 2);
  CHECK(s == SymbolSequence(Alphabet(2), {0, 1, 1, 0}));
  CHECK(parse_symbols("0a9", 11)[1] == 10);
  CHECK_THROWS_AS(parse_symbols("012", 2), InvalidParameterError);
  CHECK_THROWS_AS(parse_symbols("0x1", 4), InvalidParameterError);
  CHECK_THROWS_AS(parse_symbols(" \n", 2), EmptyInputError);
}

TEST_CASE("parse_csv_column") {
  const auto plain = parse_csv_column("1,10\n2,20\n3,30\n", "1");
  CHECK(std::vector<double>(plain.samples().begin(), plain.samples().end()) == std::vector<double>{10, 20, 30});

  const std::string with_header = "time,eeg\n0.0,-1.5\n0.1,2.5\n\n0.2,3e-1\n";
  const auto by_name = parse_csv_column(with_header, "eeg");
  CHECK(std::vector<double>(by_name.samples().begin(), by_name.samples().end()) ==
        std::vector<double>{-1.5, 2.5, 0.3});
  const auto by_index = parse_csv_column(with_header, "1");
  CHECK(by_index.size() == 3);

  CHECK_THROWS_AS(parse_csv_column("1\n2\nabc\n", "0"), InvalidParameterError);
  CHECK_THROWS_AS(parse_csv_column("1\nnan\n", "0"), InvalidParameterError);
  CHECK_THROWS_AS(parse_csv_column("a,b\n1,2\n", "c"), InvalidParameterError);
  CHECK_THROWS_AS(parse_csv_column("1,2\n3\n", "1"), InvalidParameterError);
  CHECK_THROWS_AS(parse_csv_column("x\n", "0"), EmptyInputError);
}

TEST_CASE("parse_digitizer") {
  CHECK(parse_digitizer("median").kind == Digitizer::Kind::kMedian);
  CHECK(parse_digitizer("none").kind == Digitizer::Kind::kNone);
  const auto q = parse_digitizer("quantiles:4");
  CHECK(q.kind == Digitizer::Kind::kQuantiles);
  CHECK(q.levels == 4);
  CHECK_THROWS_AS(parse_digitizer("quantiles:1"), ConfigError);
  CHECK_THROWS_AS(parse_digitizer("quantiles:x"), ConfigError);
  CHECK_THROWS_AS(parse_digitizer("mean"), ConfigError);
}

TEST_CASE("parse_generator") {
  const auto b = parse_generator("bernoulli:p=0.5,n=100000");
  CHECK(b.n == 100000);
  CHECK(std::get<BernoulliProcess>(b.spec).p == 0.5);

  const auto m = parse_generator("markov:eps=0.1,n=1000000");
  CHECK(std::get<MarkovProcess>(m.spec).transitions[0][1] == 0.1);

  const auto p = parse_generator("periodic:pattern=0120,n=7");
  CHECK(std::get<PeriodicProcess>(p.spec).pattern == std::vector<Symbol>{0, 1, 2, 0});
  CHECK(std::get<PeriodicProcess>(p.spec).alphabet_size == 3);
  CHECK(std::get<PeriodicProcess>(parse_generator("periodic:pattern=01,n=7", 4).spec).alphabet_size == 4);

  const auto c = parse_generator("constant:symbol=0,n=5");
  CHECK(std::get<ConstantProcess>(c.spec).symbol == 0);
  CHECK(std::get<ConstantProcess>(c.spec).alphabet_size == 2);

  CHECK_THROWS_AS(parse_generator("bernoulli:p=0.5"), ConfigError);
  CHECK_THROWS_AS(parse_generator("bernoulli:p=2,n=5"), ConfigError);
  CHECK_THROWS_AS(parse_generator("bernoulli:p=0.5,n=5,q=1"), ConfigError);
  CHECK_THROWS_AS(parse_generator("gauss:n=5"), ConfigError);
  CHECK_THROWS_AS(parse_generator("bernoulli"), ConfigError);
  CHECK_THROWS_AS(parse_generator("constant:symbol=01,n=5"), ConfigError);
}

TEST_CASE("markov-file generator") {
  ScratchDir dir("markov_file");
  const auto table = dir.write("t.csv", "# order 2 binary\n0.9,0.1\n0.4,0.6\n0.3,0.7\n0.05,0.95\n");
  const auto req = parse_generator("markov-file:" + table.string() + ",n=50");
  const auto& m = std::get<MarkovProcess>(req.spec);
  CHECK(m.order == 2);
  CHECK(m.alphabet_size == 2);
  CHECK(req.n == 50);

  const auto bad = dir.write("bad.csv", "0.5,0.5\n0.5,0.5\n0.5,0.5\n");
  CHECK_THROWS_AS(read_markov_table(bad), ConfigError);
  const auto unnormalized = dir.write("u.csv", "0.5,0.6\n0.5,0.5\n");
  CHECK_THROWS_AS(parse_generator("markov-file:" + unnormalized.string() + ",n=5"), ConfigError);
  CHECK_THROWS_AS(read_markov_table(dir.path() / "missing.csv"), ConfigError);
}

TEST_CASE("config contradictions") {
  ScratchDir dir("config");
  const auto file = dir.write("a.txt", "0110");
  RunConfig c;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.input = file;
  CHECK_NOTHROW(validate(c));
  c.generate = "bernoulli:p=0.5,n=10";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.generate.reset();
  c.digitizer = Digitizer{Digitizer::Kind::kMedian, 2};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.format = InputFormat::kCsv;
  CHECK_NOTHROW(validate(c));
  c.digitizer = Digitizer{};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.digitizer.reset();
  c.window = 1;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.window = 2;
  c.q_max = 17;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.q_max = 4;
  c.input = dir.path() / "missing";
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("symbols file through the pipeline") {
  ScratchDir dir("symbols");
  const auto file = dir.write("s.txt", "0110\n");
  const auto r = run_args({"--input", file.string(), "--digitizer", "none", "--alphabet-size", "2"});
  CHECK(r.status == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["c"] == 4);
  CHECK(lines[0]["l_lzw_bits"] == 4.0);
  CHECK(lines[0]["rho0"] == 1.0);
  CHECK(lines[0]["hq"].size() == 3);  // qmax 4 clamped to n-1
  CHECK(r.out.find("\"rho0\":1.0") != std::string::npos);
  CHECK(r.err.find("summary: 1 reports, 0 errors") != std::string::npos);
}

TEST_CASE("generator demo") {
  const auto r = run_args({"--generate", "bernoulli:p=0.5,n=100000", "--seed", "1"});
  CHECK(r.status == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(std::abs(lines[0]["h0"].get<double>() - 1.0) < 0.001);
  CHECK(lines[0]["n"] == 100000);
  CHECK(lines[0]["surrogate_count"] == 10);
  CHECK(lines[0]["seed"] == 1);
}

TEST_CASE("directory with a corrupt file") {
  ScratchDir dir("corpus");
  for (int i = 0; i < 3; ++i) {
    std::string text = "t,v\n";
    for (int k = 0; k < 200; ++k) text += std::to_string(k) + "," + std::to_string((k * 37 + i * 11) % 211) + "\n";
    dir.write("rec" + std::to_string(i) + ".csv", text);
  }
  dir.write("rec1_bad.csv", "t,v\n0,1.5\n1,oops\n");
  const auto r = run_args({"--input", dir.path().string(), "--format", "csv", "--column", "v", "--surrogates", "2"});
  CHECK(r.status == 1);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 4);
  std::size_t reports = 0, errors = 0;
  for (const auto& l : lines) (l.contains("error") ? errors : reports)++;
  CHECK(reports == 3);
  CHECK(errors == 1);
  // Lexicographic unit order.
  CHECK(lines[0]["source"]["path"].get<std::string>().ends_with("rec0.csv"));
  CHECK(lines[1]["source"]["path"].get<std::string>().ends_with("rec1.csv"));
  CHECK(lines[2]["source"]["path"].get<std::string>().ends_with("rec1_bad.csv"));
  CHECK(lines[2].contains("error"));
  CHECK(lines[0]["h0"] == 1.0);
}

TEST_CASE("windowing keeps n constant and drops tails") {
  RunConfig c;
  c.generate = "markov:eps=0.2,n=10500";
  c.window = 1000;
  c.surrogates = 1;
  c.seed = 3;
  std::ostringstream out, err;
  RunSummary s;
  CHECK(run(c, out, err, &s) == 0);
  const auto lines = json_lines(out.str());
  REQUIRE(lines.size() == 10);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    CHECK(lines[k]["n"] == 1000);
    CHECK(lines[k]["source"]["window"] == k);
    CHECK(lines[k]["seed"] == 3 + k);
  }
  CHECK(s.dropped_windows == 1);
  CHECK(s.dropped_samples == 500);
  CHECK(err.str().find("1 trailing partial windows dropped (500 samples)") != std::string::npos);
}

TEST_CASE("windows of numeric input are digitized independently") {
  ScratchDir dir("numeric_windows");
  std::string text;
  // Second half sits far above the first, so a global median would make
  // each window constant.
  for (int k = 0; k < 400; ++k) text += std::to_string((k < 200 ? 0 : 1000) + (k * 7919) % 200) + "\n";
  const auto file = dir.write("x.csv", text);
  const auto r = run_args({"--input", file.string(), "--format", "csv", "--window", "200", "--surrogates", "0",
                           "--digitizer", "quantiles:4"});
  CHECK(r.status == 0);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 2);
  for (const auto& l : lines) {
    CHECK(l["alphabet_size"] == 4);
    CHECK(l["h0"] == 2.0);
  }
}

TEST_CASE("csv output") {
  ScratchDir dir("csv_out");
  dir.write("a.txt", "0110100110");
  dir.write("b.txt", "01");
  const auto r = run_args({"--input", dir.path().string(), "--output-format", "csv", "--surrogates", "0"});
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string header, row1, row2, extra;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK_FALSE(std::getline(in, extra));
  CHECK(header == csv_header(4));
  CHECK(row1.rfind("10,2,", 0) == 0);
  CHECK(row2.rfind("2,2,", 0) == 0);
}

TEST_CASE("output file and exit codes") {
  ScratchDir dir("exit");
  const auto out_path = dir.path() / "out.jsonl";
  const auto ok = run_args({"--generate", "constant:symbol=1,n=2000", "--output", out_path.string()});
  CHECK(ok.status == 0);
  CHECK(ok.out.empty());
  std::ifstream in(out_path);
  std::string line;
  REQUIRE(std::getline(in, line));
  const auto j = nlohmann::json::parse(line);
  CHECK(j["rho1_surrogate"] == 1.0);
  CHECK(j["rho1_analytic"].is_null());

  CHECK(run_args({"--generate", "bernoulli:p=0.5,n=10", "--digitizer", "median"}).status == 2);
  CHECK(run_args({"--window", "5"}).status == 2);
  CHECK(run_args({"--generate", "nope:n=1"}).status == 2);
  CHECK(run_args({"--generate", "bernoulli:p=0.5,n=10", "--bogus"}).status == 2);
  CHECK(run_args({"--input", (dir.path() / "missing.txt").string()}).status == 2);
  CHECK(run_args({"--help"}).status == 0);

  const auto bad = dir.write("bad.txt", "0120");
  const auto r = run_args({"--input", bad.string()});
  CHECK(r.status == 1);
  CHECK(json_lines(r.out).at(0).contains("error"));
}

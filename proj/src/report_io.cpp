#include "lzc/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "lzc/error.hpp"

namespace lzc {

namespace {

using ojson = nlohmann::ordered_json;

ojson number(double x) { return round_significant(x); }

ojson optional_number(const std::optional<double>& x) {
  return x ? number(*x) : ojson(nullptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

template <class T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("report is missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report field '") + key + "' has the wrong type: " + e.what());
  }
}

std::optional<double> optional_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("report is missing field '") + key + "'");
  if (j.at(key).is_null()) return std::nullopt;
  return required<double>(j, key);
}

}  // namespace

double round_significant(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::strtod(buf, nullptr);
}

ojson report_to_json(const MetricReport& r, const Source& source) {
  ojson hq = ojson::array();
  for (double h : r.entropy.hq) hq.push_back(number(h));
  ojson src = {{"path", source.path}, {"window", source.window ? ojson(*source.window) : ojson(nullptr)}};

  ojson j;
  j["n"] = r.n;
  j["alphabet_size"] = r.alphabet_size;
  j["c"] = r.c;
  j["dict_size"] = r.dict_size;
  j["l_lzw_bits"] = number(r.l_lzw_bits);
  j["bound_bits"] = number(r.bound_bits);
  j["rho0"] = number(r.rho0);
  j["rho1_analytic"] = optional_number(r.rho1_analytic);
  j["rho1_surrogate"] = optional_number(r.rho1_surrogate);
  j["rho2"] = number(r.rho2);
  j["h0"] = number(r.entropy.h0);
  j["hq"] = std::move(hq);
  j["surrogate_count"] = r.surrogate_count;
  j["seed"] = r.seed;
  j["source"] = std::move(src);
  j["warnings"] = r.warnings;
  j["note"] = r.note;
  return j;
}

std::string emit_json(const MetricReport& report, const Source& source) {
  return report_to_json(report, source).dump();
}

std::string emit_error_json(const Source& source, const std::string& message) {
  ojson j;
  j["source"] = {{"path", source.path},
                 {"window", source.window ? ojson(*source.window) : ojson(nullptr)}};
  j["error"] = message;
  return j.dump();
}

MetricReport report_from_json(const nlohmann::json& j, Source* source) {
  if (!j.is_object()) throw Error("report is not a JSON object");
  MetricReport r;
  r.n = required<std::size_t>(j, "n");
  r.alphabet_size = required<std::size_t>(j, "alphabet_size");
  r.c = required<std::size_t>(j, "c");
  r.dict_size = required<std::size_t>(j, "dict_size");
  r.l_lzw_bits = required<double>(j, "l_lzw_bits");
  r.bound_bits = required<double>(j, "bound_bits");
  r.rho0 = required<double>(j, "rho0");
  r.rho1_analytic = optional_field(j, "rho1_analytic");
  r.rho1_surrogate = optional_field(j, "rho1_surrogate");
  r.rho2 = required<double>(j, "rho2");
  r.entropy.h0 = required<double>(j, "h0");
  r.entropy.hq = required<std::vector<double>>(j, "hq");
  r.entropy.q_max = r.entropy.hq.size();
  r.surrogate_count = required<std::size_t>(j, "surrogate_count");
  r.seed = required<std::uint64_t>(j, "seed");
  r.warnings = required<std::vector<std::string>>(j, "warnings");
  r.note = required<std::string>(j, "note");
  if (source) {
    const auto& s = j.at("source");
    source->path = required<std::string>(s, "path");
    source->window = s.contains("window") && !s.at("window").is_null()
                         ? std::optional<std::size_t>(s.at("window").get<std::size_t>())
                         : std::nullopt;
  }
  return r;
}

std::string csv_header(std::size_t q_max) {
  std::ostringstream os;
  os << "n,alphabet_size,c,dict_size,l_lzw_bits,bound_bits,rho0,rho1_analytic,rho1_surrogate,"
        "rho2,h0";
  for (std::size_t q = 1; q <= q_max; ++q) os << ",hq_" << q;
  os << ",surrogate_count,seed,source_path,source_window,warnings,note";
  return os.str();
}

std::string emit_csv(const MetricReport& r, const Source& source, std::size_t q_max) {
  auto num = [](double x) { return number(x).dump(); };
  auto opt = [&](const std::optional<double>& x) { return x ? num(*x) : std::string(); };

  std::ostringstream os;
  os << r.n << ',' << r.alphabet_size << ',' << r.c << ',' << r.dict_size << ','
     << num(r.l_lzw_bits) << ',' << num(r.bound_bits) << ',' << num(r.rho0) << ','
     << opt(r.rho1_analytic) << ',' << opt(r.rho1_surrogate) << ',' << num(r.rho2) << ','
     << num(r.entropy.h0);
  for (std::size_t q = 0; q < q_max; ++q) {
    os << ',';
    if (q < r.entropy.hq.size()) os << num(r.entropy.hq[q]);
  }
  std::string warnings;
  for (std::size_t i = 0; i < r.warnings.size(); ++i) {
    if (i) warnings += ';';
    warnings += r.warnings[i];
  }
  os << ',' << r.surrogate_count << ',' << r.seed << ',' << csv_escape(source.path) << ','
     << (source.window ? std::to_string(*source.window) : std::string()) << ','
     << csv_escape(warnings) << ',' << csv_escape(r.note);
  return os.str();
}

}  // namespace lzc

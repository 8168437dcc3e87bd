#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lzc/entropy.hpp"
#include "lzc/sequence.hpp"

namespace lzc {

inline constexpr double kDegenerateH0 = 1e-9;
inline constexpr std::size_t kShortSequence = 1000;
inline constexpr std::size_t kDefaultSurrogates = 10;

namespace warning {
inline constexpr const char* kShortSequence = "short sequence";
inline constexpr const char* kRho2Negative = "rho2 negative";
inline constexpr const char* kH0Degenerate = "h0 degenerate";
inline constexpr const char* kQmaxClamped = "qmax clamped";
}  // namespace warning

inline constexpr const char* kUpperBoundNote =
    "l_lzw is an upper bound on algorithmic description length";

struct MetricReport {
  std::size_t n = 0;
  std::size_t alphabet_size = 0;
  std::size_t c = 0;
  std::size_t dict_size = 0;
  double l_lzw_bits = 0.0;
  double bound_bits = 0.0;
  double rho0 = 0.0;
  std::optional<double> rho1_analytic;
  std::optional<double> rho1_surrogate;
  double rho2 = 0.0;
  EntropyProfile entropy;
  std::size_t surrogate_count = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  std::string note = kUpperBoundNote;

  bool has_warning(std::string_view w) const;
};

double rho0(double l_lzw_bits, std::size_t n);

// c log2(n) / (n h0); empty when h0 < kDegenerateH0 or n < 2.
std::optional<double> rho1_analytic(std::size_t c, std::size_t n, double h0);

// l_LZW(seq) over the mean l_LZW of `surrogates` shuffles seeded
// seed+1..seed+surrogates. Surrogates are encoded in parallel.
double rho1_surrogate(const SymbolSequence& seq, std::size_t surrogates, std::uint64_t seed);

// Mean description length of the shuffled surrogates used by rho1_surrogate.
double mean_surrogate_length(const SymbolSequence& seq, std::size_t surrogates, std::uint64_t seed);

// h0 - rho0, unclamped.
double rho2(double h0, double rho0);

// Full metric set for one sequence. q_max above min(n-1, 16) is lowered to
// that limit with a "qmax clamped" warning; surrogates == 0 disables the
// surrogate ratio.
MetricReport analyze(const SymbolSequence& seq, std::size_t q_max, std::size_t surrogates,
                     std::uint64_t seed);

}  // namespace lzc

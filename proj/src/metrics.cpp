#include "lzc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "lzc/error.hpp"
#include "lzc/lzw.hpp"

namespace lzc {

bool MetricReport::has_warning(std::string_view w) const {
  return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
}

double rho0(double l_lzw_bits, std::size_t n) {
  if (n < 1) throw InvalidParameterError("rho0 needs n >= 1");
  return l_lzw_bits / static_cast<double>(n);
}

std::optional<double> rho1_analytic(std::size_t c, std::size_t n, double h0) {
  if (n < 2 || h0 < kDegenerateH0) return std::nullopt;
  const double nn = static_cast<double>(n);
  return static_cast<double>(c) * std::log2(nn) / (nn * h0);
}

double mean_surrogate_length(const SymbolSequence& seq, std::size_t surrogates, std::uint64_t seed) {
  if (surrogates < 1) throw InvalidParameterError("need at least one surrogate");
  std::vector<double> lengths(surrogates, 0.0);

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, surrogates);
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < surrogates; k += workers) {
        lengths[k] = encode(shuffle(seq, seed + k + 1)).description_length_bits;
      }
    }));
  }
  for (auto& j : jobs) j.get();

  // Deviations from the first surrogate, summed in surrogate order: the
  // result does not depend on scheduling, and identical surrogates give
  // exactly their common length.
  double deviation = 0.0;
  for (double l : lengths) deviation += l - lengths.front();
  return lengths.front() + deviation / static_cast<double>(surrogates);
}

double rho1_surrogate(const SymbolSequence& seq, std::size_t surrogates, std::uint64_t seed) {
  const double original = encode(seq).description_length_bits;
  return original / mean_surrogate_length(seq, surrogates, seed);
}

double rho2(double h0, double rho0) { return h0 - rho0; }

MetricReport analyze(const SymbolSequence& seq, std::size_t q_max, std::size_t surrogates,
                     std::uint64_t seed) {
  MetricReport r;
  r.n = seq.size();
  r.alphabet_size = seq.alphabet_size();
  r.seed = seed;
  r.surrogate_count = surrogates;

  const LzwResult lzw = encode(seq);
  r.c = lzw.phrase_count;
  r.dict_size = lzw.dict_size;
  r.l_lzw_bits = lzw.description_length_bits;
  r.bound_bits = lzw.bound_bits;

  const std::size_t q_limit = std::min(r.n - 1, kMaxEntropyOrder);
  const std::size_t q = std::min(q_max, q_limit);
  if (q < q_max) r.warnings.emplace_back(warning::kQmaxClamped);
  if (q >= 1) {
    r.entropy = entropy_profile(seq, q);
  } else {
    r.entropy.h0 = empirical_h0(seq);
  }

  r.rho0 = rho0(r.l_lzw_bits, r.n);
  r.rho2 = rho2(r.entropy.h0, r.rho0);
  r.rho1_analytic = rho1_analytic(r.c, r.n, r.entropy.h0);
  if (surrogates > 0) {
    r.rho1_surrogate = r.l_lzw_bits / mean_surrogate_length(seq, surrogates, seed);
  }

  if (r.n < kShortSequence) r.warnings.emplace_back(warning::kShortSequence);
  if (r.rho2 < 0.0) r.warnings.emplace_back(warning::kRho2Negative);
  if (!r.rho1_analytic) r.warnings.emplace_back(warning::kH0Degenerate);
  return r;
}

}  // namespace lzc

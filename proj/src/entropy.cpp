#include "lzc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_map>

#include "lzc/error.hpp"

namespace lzc {

namespace {

// Dense counting is used while A^q stays below this many cells.
constexpr std::size_t kDenseCells = std::size_t{1} << 22;

// A^q, or 0 if it does not fit in 64 bits.
std::uint64_t power_or_zero(std::size_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return 0;
    r *= base;
  }
  return r;
}

// Counts of every distinct overlapping q-gram, in ascending gram order.
std::vector<std::size_t> qgram_counts(const SymbolSequence& seq, std::size_t q) {
  const auto data = seq.data();
  const std::size_t n = data.size();
  const std::size_t a = seq.alphabet_size();
  const std::uint64_t cells = power_or_zero(a, q);

  if (cells != 0) {
    // Rolling base-A code of the current window; the oldest symbol is the
    // most significant digit.
    const std::uint64_t top = cells / a;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i + 1 < q; ++i) code = code * a + data[i];

    if (cells <= kDenseCells) {
      std::vector<std::size_t> table(cells, 0);
      for (std::size_t i = q - 1; i < n; ++i) {
        code = code * a + data[i];
        ++table[code];
        code %= top;
      }
      std::vector<std::size_t> counts;
      for (std::size_t c : table) {
        if (c != 0) counts.push_back(c);
      }
      return counts;
    }

    std::unordered_map<std::uint64_t, std::size_t> table;
    for (std::size_t i = q - 1; i < n; ++i) {
      code = code * a + data[i];
      ++table[code];
      code %= top;
    }
    std::vector<std::pair<std::uint64_t, std::size_t>> entries(table.begin(), table.end());
    std::sort(entries.begin(), entries.end());
    std::vector<std::size_t> counts;
    counts.reserve(entries.size());
    for (const auto& [gram, c] : entries) counts.push_back(c);
    return counts;
  }

  // Gram codes overflow 64 bits; key by the symbols themselves.
  std::map<std::vector<Symbol>, std::size_t> table;
  for (std::size_t i = 0; i + q <= n; ++i) {
    ++table[std::vector<Symbol>(data.begin() + static_cast<std::ptrdiff_t>(i),
                                data.begin() + static_cast<std::ptrdiff_t>(i + q))];
  }
  std::vector<std::size_t> counts;
  counts.reserve(table.size());
  for (const auto& [gram, c] : table) counts.push_back(c);
  return counts;
}

// Finite-sample block differences can stray slightly outside [0, log2 A].
double clamp_rate(double diff, std::size_t alphabet_size) {
  return std::clamp(diff, 0.0, std::log2(static_cast<double>(alphabet_size)));
}

}  // namespace

double h0_bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameterError("probability must lie in [0, 1], got " + std::to_string(p));
  }
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

double entropy_of_counts(const std::vector<std::size_t>& counts) {
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  if (total == 0) return 0.0;
  const double t = static_cast<double>(total);
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / t;
    h -= p * std::log2(p);
  }
  return std::max(0.0, h);
}

double empirical_h0(const SymbolSequence& seq) { return entropy_of_counts(seq.histogram()); }

double empirical_block_entropy(const SymbolSequence& seq, std::size_t q) {
  if (q < 1 || q > seq.size()) {
    throw InvalidParameterError("block length " + std::to_string(q) + " must lie in [1, " +
                                std::to_string(seq.size()) + "]");
  }
  return entropy_of_counts(qgram_counts(seq, q));
}

double empirical_hq(const SymbolSequence& seq, std::size_t q) {
  if (q < 1 || q + 1 > seq.size()) {
    throw InvalidParameterError("conditional order " + std::to_string(q) + " must lie in [1, " +
                                std::to_string(seq.size() - 1) + "]");
  }
  const double diff = empirical_block_entropy(seq, q + 1) - empirical_block_entropy(seq, q);
  return clamp_rate(diff, seq.alphabet_size());
}

EntropyProfile entropy_profile(const SymbolSequence& seq, std::size_t q_max) {
  const std::size_t limit = std::min(seq.size() - 1, kMaxEntropyOrder);
  if (q_max < 1 || q_max > limit) {
    throw InvalidParameterError("q_max " + std::to_string(q_max) + " must lie in [1, " +
                                std::to_string(limit) + "]");
  }
  EntropyProfile p;
  p.h0 = empirical_h0(seq);
  p.q_max = q_max;
  p.hq.reserve(q_max);
  // Block entropies are shared between neighbouring orders.
  double prev = empirical_block_entropy(seq, 1);
  for (std::size_t q = 1; q <= q_max; ++q) {
    const double next = empirical_block_entropy(seq, q + 1);
    p.hq.push_back(clamp_rate(next - prev, seq.alphabet_size()));
    prev = next;
  }
  return p;
}

}  // namespace lzc

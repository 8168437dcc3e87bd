#include "lzc/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lzc/error.hpp"
#include "lzc/rng.hpp"

namespace lzc {

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size < 2) {
    throw InvalidParameterError("alphabet size must be at least 2, got " + std::to_string(size));
  }
}

SymbolSequence::SymbolSequence(Alphabet alphabet, std::vector<Symbol> data)
    : alphabet_(alphabet), data_(std::move(data)) {
  if (data_.empty()) throw EmptyInputError("symbol sequence is empty");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!alphabet_.contains(data_[i])) {
      throw InvalidParameterError("symbol " + std::to_string(data_[i]) + " at position " +
                                  std::to_string(i) + " is outside alphabet of size " +
                                  std::to_string(alphabet_.size()));
    }
  }
}

std::vector<std::size_t> SymbolSequence::histogram() const {
  std::vector<std::size_t> counts(alphabet_.size(), 0);
  for (Symbol s : data_) ++counts[s];
  return counts;
}

NumericSeries::NumericSeries(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw EmptyInputError("numeric series is empty");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw InvalidParameterError("non-finite sample at position " + std::to_string(i));
    }
  }
}

namespace {

// Empirical quantile at probability k/levels over sorted values: with
// h = n*k/levels, the mean of the h-th and (h+1)-th order statistics when h
// is an integer, otherwise the ceil(h)-th. For k/levels = 1/2 this is the
// usual median.
double order_quantile(std::span<const double> sorted, std::size_t k, std::size_t levels) {
  const std::size_t n = sorted.size();
  const std::size_t num = n * k;
  const std::size_t h = num / levels;
  if (num % levels == 0) {
    if (h == 0) return sorted.front();
    if (h >= n) return sorted.back();
    return (sorted[h - 1] + sorted[h]) / 2.0;
  }
  return sorted[h];  // ceil(h) in 1-based order statistics
}

std::vector<double> sorted_copy(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

double median(std::span<const double> values) {
  if (values.empty()) throw EmptyInputError("median of empty data");
  const auto sorted = sorted_copy(values);
  return order_quantile(sorted, 1, 2);
}

SymbolSequence binarize_median(const NumericSeries& series) {
  const double m = median(series.samples());
  std::vector<Symbol> out;
  out.reserve(series.size());
  for (double x : series.samples()) out.push_back(x > m ? 1 : 0);
  return SymbolSequence(Alphabet(2), std::move(out));
}

SymbolSequence digitize_quantiles(const NumericSeries& series, std::size_t levels) {
  if (levels < 2) {
    throw InvalidParameterError("quantile digitizer needs at least 2 levels, got " +
                                std::to_string(levels));
  }
  const auto sorted = sorted_copy(series.samples());
  std::vector<double> cuts;
  cuts.reserve(levels - 1);
  for (std::size_t k = 1; k < levels; ++k) cuts.push_back(order_quantile(sorted, k, levels));

  std::vector<Symbol> out;
  out.reserve(series.size());
  for (double x : series.samples()) {
    // number of cut points strictly below x
    const auto below = std::lower_bound(cuts.begin(), cuts.end(), x) - cuts.begin();
    out.push_back(static_cast<Symbol>(below));
  }
  return SymbolSequence(Alphabet(levels), std::move(out));
}

SymbolSequence shuffle(const SymbolSequence& seq, std::uint64_t seed) {
  std::vector<Symbol> data(seq.data().begin(), seq.data().end());
  Rng rng(seed);
  for (std::size_t i = data.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(data[i - 1], data[j]);
  }
  return SymbolSequence(seq.alphabet(), std::move(data));
}

}  // namespace lzc

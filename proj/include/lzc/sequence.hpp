#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lzc {

using Symbol = std::uint32_t;

// Alphabet of `size` symbols, canonically 0..size-1.
class Alphabet {
 public:
  explicit Alphabet(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool contains(Symbol s) const noexcept { return s < size_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t size_;
};

// Non-empty string of symbol indices over an explicit alphabet.
class SymbolSequence {
 public:
  // Throws EmptyInputError on empty data, InvalidParameterError when a
  // symbol lies outside the alphabet.
  SymbolSequence(Alphabet alphabet, std::vector<Symbol> data);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::span<const Symbol> data() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }
  Symbol operator[](std::size_t i) const noexcept { return data_[i]; }

  // Occurrence count of each symbol, indexed by symbol.
  std::vector<std::size_t> histogram() const;

  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> data_;
};

// Real-valued samples prior to digitization. NaN and infinities are
// rejected on construction.
class NumericSeries {
 public:
  explicit NumericSeries(std::vector<double> samples);

  std::span<const double> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  std::vector<double> samples_;
};

// Midpoint-of-sorted-order median.
double median(std::span<const double> values);

// 1 for samples strictly above the median, 0 otherwise.
SymbolSequence binarize_median(const NumericSeries& series);

// Empirical-quantile digitizer over `levels` symbols. Cut points are the
// k/levels order-statistic quantiles; a sample equal to a cut point falls in
// the lower bin. levels == 2 reproduces binarize_median.
SymbolSequence digitize_quantiles(const NumericSeries& series, std::size_t levels);

// Fisher-Yates permutation driven by Rng seeded with `seed`.
SymbolSequence shuffle(const SymbolSequence& seq, std::uint64_t seed);

}  // namespace lzc

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "lzc/sequence.hpp"

namespace lzc {

// i.i.d. binary source emitting 1 with probability p.
struct BernoulliProcess {
  double p = 0.5;
};

// Order-m chain over A symbols. Row s of `transitions` is the law of the
// next symbol given the previous m symbols, with s their base-A number
// (oldest symbol most significant). There are A^m rows of A entries.
struct MarkovProcess {
  std::size_t alphabet_size = 2;
  std::size_t order = 1;
  std::vector<std::vector<double>> transitions;

  // Binary order-1 chain that flips symbol with probability eps.
  static MarkovProcess symmetric_binary(double eps);

  std::size_t state_count() const;
};

struct PeriodicProcess {
  std::vector<Symbol> pattern;
  std::size_t alphabet_size = 2;
};

struct ConstantProcess {
  Symbol symbol = 0;
  std::size_t alphabet_size = 2;
};

using ProcessSpec = std::variant<BernoulliProcess, MarkovProcess, PeriodicProcess, ConstantProcess>;

inline constexpr std::size_t kMaxMarkovStates = 65536;

// Throws InvalidParameterError for a malformed spec.
void validate(const ProcessSpec& spec);

std::size_t alphabet_size(const ProcessSpec& spec);

// Stationary law over the A^m composite states, by power iteration of the
// lazy chain (I + P)/2 to an L1 residual of 1e-12 (at most 10^6 steps).
// Throws DegenerateProcessError when the chain has more than one closed
// class or fails to converge.
std::vector<double> stationary_distribution(const MarkovProcess& chain);

// Deterministic realization of `spec` of length n.
SymbolSequence generate(const ProcessSpec& spec, std::size_t n, std::uint64_t seed);

// Exact entropy rate of the process in bits per symbol.
double spec_entropy_rate(const ProcessSpec& spec);

}  // namespace lzc

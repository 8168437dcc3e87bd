#pragma once

#include <cstddef>
#include <vector>

#include "lzc/process.hpp"
#include "lzc/sequence.hpp"

namespace lzc {

inline constexpr std::size_t kMaxEntropyOrder = 16;

// Plug-in entropies of one sequence, in bits per symbol. hq[q-1] is the
// order-q conditional entropy H(X_{q+1} | X_1..X_q).
struct EntropyProfile {
  double h0 = 0.0;
  std::vector<double> hq;
  std::size_t q_max = 0;
};

// Binary entropy of a Bernoulli(p) source, with 0 log 0 = 0.
double h0_bernoulli(double p);

// Shannon entropy (bits) of a distribution given by raw counts. Terms are
// summed in the order given, so callers that need reproducible results pass
// counts in a canonical order.
double entropy_of_counts(const std::vector<std::size_t>& counts);

double empirical_h0(const SymbolSequence& seq);

// Entropy of the empirical distribution of the n-q+1 overlapping q-grams.
double empirical_block_entropy(const SymbolSequence& seq, std::size_t q);

// block(q+1) - block(q), clamped below at 0. Requires 1 <= q <= n-1.
double empirical_hq(const SymbolSequence& seq, std::size_t q);

// h0 plus empirical_hq for q = 1..q_max; requires 1 <= q_max <= min(n-1, 16).
EntropyProfile entropy_profile(const SymbolSequence& seq, std::size_t q_max);

// Exact entropy rate of a generator process: H0(p) for Bernoulli, the
// stationary-weighted row entropy for Markov chains, 0 for periodic and
// constant sources.
double analytic_entropy_rate(const ProcessSpec& spec);

}  // namespace lzc

#include "lzc/process.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lzc/entropy.hpp"
#include "lzc/error.hpp"
#include "lzc/rng.hpp"

namespace lzc {

namespace {

constexpr double kRowTolerance = 1e-12;
constexpr double kStationaryResidual = 1e-12;
constexpr std::size_t kMaxIterations = 1'000'000;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::size_t next_state(std::size_t state, Symbol x, std::size_t alphabet, std::size_t states) {
  return (state * alphabet + x) % states;
}

// Index drawn from a probability vector by inversion.
std::size_t sample_index(const std::vector<double>& probs, Rng& rng) {
  const double u = rng.unit();
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cum += probs[i];
    last_positive = i;
    if (u < cum) return i;
  }
  return last_positive;
}

// True when some state is reachable from every state, i.e. exactly one
// closed communicating class exists. `anchor` must belong to a closed class.
bool single_closed_class(const MarkovProcess& chain, std::size_t anchor) {
  const std::size_t states = chain.state_count();
  const std::size_t a = chain.alphabet_size;
  std::vector<std::vector<std::size_t>> reverse(states);
  for (std::size_t s = 0; s < states; ++s) {
    for (std::size_t x = 0; x < a; ++x) {
      if (chain.transitions[s][x] > 0.0) {
        reverse[next_state(s, static_cast<Symbol>(x), a, states)].push_back(s);
      }
    }
  }
  std::vector<char> seen(states, 0);
  std::vector<std::size_t> stack{anchor};
  seen[anchor] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t : reverse[s]) {
      if (!seen[t]) {
        seen[t] = 1;
        ++reached;
        stack.push_back(t);
      }
    }
  }
  return reached == states;
}

}  // namespace

MarkovProcess MarkovProcess::symmetric_binary(double eps) {
  MarkovProcess m;
  m.alphabet_size = 2;
  m.order = 1;
  m.transitions = {{1.0 - eps, eps}, {eps, 1.0 - eps}};
  return m;
}

std::size_t MarkovProcess::state_count() const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < order; ++i) {
    if (s > kMaxMarkovStates / std::max<std::size_t>(alphabet_size, 1)) return kMaxMarkovStates + 1;
    s *= alphabet_size;
  }
  return s;
}

void validate(const ProcessSpec& spec) {
  std::visit(
      Overloaded{
          [](const BernoulliProcess& b) {
            if (!(b.p >= 0.0 && b.p <= 1.0)) {
              throw InvalidParameterError("bernoulli p must lie in [0, 1]");
            }
          },
          [](const MarkovProcess& m) {
            if (m.alphabet_size < 2) throw InvalidParameterError("markov alphabet size must be >= 2");
            if (m.order < 1) throw InvalidParameterError("markov order must be >= 1");
            const std::size_t states = m.state_count();
            if (states > kMaxMarkovStates) {
              throw InvalidParameterError("markov chain exceeds " + std::to_string(kMaxMarkovStates) +
                                          " states");
            }
            if (m.transitions.size() != states) {
              throw InvalidParameterError("markov table needs " + std::to_string(states) +
                                          " rows, got " + std::to_string(m.transitions.size()));
            }
            for (std::size_t s = 0; s < states; ++s) {
              const auto& row = m.transitions[s];
              if (row.size() != m.alphabet_size) {
                throw InvalidParameterError("markov row " + std::to_string(s) + " has " +
                                            std::to_string(row.size()) + " entries");
              }
              double sum = 0.0;
              for (double v : row) {
                if (!(v >= 0.0 && v <= 1.0)) {
                  throw InvalidParameterError("markov row " + std::to_string(s) +
                                              " has an entry outside [0, 1]");
                }
                sum += v;
              }
              if (std::abs(sum - 1.0) > kRowTolerance) {
                throw InvalidParameterError("markov row " + std::to_string(s) + " sums to " +
                                            std::to_string(sum));
              }
            }
          },
          [](const PeriodicProcess& p) {
            if (p.pattern.empty()) throw InvalidParameterError("periodic pattern is empty");
            Alphabet a(p.alphabet_size);
            for (Symbol s : p.pattern) {
              if (!a.contains(s)) throw InvalidParameterError("periodic pattern symbol outside alphabet");
            }
          },
          [](const ConstantProcess& c) {
            Alphabet a(c.alphabet_size);
            if (!a.contains(c.symbol)) throw InvalidParameterError("constant symbol outside alphabet");
          },
      },
      spec);
}

std::size_t alphabet_size(const ProcessSpec& spec) {
  return std::visit(Overloaded{
                        [](const BernoulliProcess&) -> std::size_t { return 2; },
                        [](const MarkovProcess& m) { return m.alphabet_size; },
                        [](const PeriodicProcess& p) { return p.alphabet_size; },
                        [](const ConstantProcess& c) { return c.alphabet_size; },
                    },
                    spec);
}

std::vector<double> stationary_distribution(const MarkovProcess& chain) {
  validate(chain);
  const std::size_t states = chain.state_count();
  const std::size_t a = chain.alphabet_size;

  std::vector<double> pi(states, 1.0 / static_cast<double>(states));
  std::vector<double> next(states);
  bool converged = false;
  for (std::size_t it = 0; it < kMaxIterations; ++it) {
    for (std::size_t s = 0; s < states; ++s) next[s] = 0.5 * pi[s];
    for (std::size_t s = 0; s < states; ++s) {
      const double mass = 0.5 * pi[s];
      if (mass == 0.0) continue;
      for (std::size_t x = 0; x < a; ++x) {
        next[next_state(s, static_cast<Symbol>(x), a, states)] += mass * chain.transitions[s][x];
      }
    }
    double residual = 0.0;
    double total = 0.0;
    for (std::size_t s = 0; s < states; ++s) {
      residual += std::abs(next[s] - pi[s]);
      total += next[s];
    }
    for (std::size_t s = 0; s < states; ++s) pi[s] = next[s] / total;
    if (residual < kStationaryResidual) {
      converged = true;
      break;
    }
  }
  if (!converged) throw DegenerateProcessError("stationary distribution did not converge");

  const auto anchor =
      static_cast<std::size_t>(std::max_element(pi.begin(), pi.end()) - pi.begin());
  if (!single_closed_class(chain, anchor)) {
    throw DegenerateProcessError("markov chain has no unique stationary distribution");
  }
  return pi;
}

SymbolSequence generate(const ProcessSpec& spec, std::size_t n, std::uint64_t seed) {
  validate(spec);
  if (n < 1) throw InvalidParameterError("generated length must be >= 1");
  Rng rng(seed);
  std::vector<Symbol> out;
  out.reserve(n);

  std::visit(
      Overloaded{
          [&](const BernoulliProcess& b) {
            for (std::size_t i = 0; i < n; ++i) out.push_back(rng.unit() < b.p ? 1 : 0);
          },
          [&](const MarkovProcess& m) {
            const std::size_t states = m.state_count();
            const std::size_t a = m.alphabet_size;
            const auto pi = stationary_distribution(m);
            std::size_t state = sample_index(pi, rng);
            // Spell out the initial state, oldest symbol first.
            std::vector<Symbol> digits(m.order);
            for (std::size_t k = m.order, s = state; k-- > 0; s /= a) digits[k] = static_cast<Symbol>(s % a);
            for (std::size_t k = 0; k < m.order && out.size() < n; ++k) out.push_back(digits[k]);
            while (out.size() < n) {
              const auto x = static_cast<Symbol>(sample_index(m.transitions[state], rng));
              out.push_back(x);
              state = next_state(state, x, a, states);
            }
          },
          [&](const PeriodicProcess& p) {
            for (std::size_t i = 0; i < n; ++i) out.push_back(p.pattern[i % p.pattern.size()]);
          },
          [&](const ConstantProcess& c) { out.assign(n, c.symbol); },
      },
      spec);
  return SymbolSequence(Alphabet(alphabet_size(spec)), std::move(out));
}

double analytic_entropy_rate(const ProcessSpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const BernoulliProcess& b) { return h0_bernoulli(b.p); },
                        [](const MarkovProcess& m) {
                          const auto pi = stationary_distribution(m);
                          double rate = 0.0;
                          for (std::size_t s = 0; s < pi.size(); ++s) {
                            double row = 0.0;
                            for (double v : m.transitions[s]) {
                              if (v > 0.0) row -= v * std::log2(v);
                            }
                            rate += pi[s] * row;
                          }
                          return rate;
                        },
                        [](const PeriodicProcess&) { return 0.0; },
                        [](const ConstantProcess&) { return 0.0; },
                    },
                    spec);
}

double spec_entropy_rate(const ProcessSpec& spec) { return analytic_entropy_rate(spec); }

}  // namespace lzc

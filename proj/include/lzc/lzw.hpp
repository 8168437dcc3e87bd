#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lzc/sequence.hpp"

namespace lzc {

using Code = std::uint32_t;

// Outcome of an LZW parse.
//
// phrase_count is c(n), the number of emitted codes. dict_size counts every
// dictionary entry at termination (the A seed symbols plus one insertion per
// phrase except the last), so dict_size == alphabet_size + phrase_count - 1.
struct LzwResult {
  std::vector<Code> codes;
  std::size_t phrase_count = 0;
  std::size_t dict_size = 0;
  std::size_t alphabet_size = 0;
  double description_length_bits = 0.0;
  double bound_bits = 0.0;
};

// Parses `seq` with an unbounded, never-reset LZW dictionary seeded with the
// single-symbol strings 0..A-1, and fills in both length measures.
LzwResult encode(const SymbolSequence& seq);

// log2(log2 M) + c * log2 M with M = max(2, largest emitted code): the size
// of the code stream written with a fixed width of log2 M bits per code plus
// the bits needed to state that width.
double description_length(std::span<const Code> codes);
inline double description_length(const LzwResult& r) { return description_length(r.codes); }

// c * log2(c + log2 A).
double description_length_bound(std::size_t phrase_count, std::size_t alphabet_size);

// Inverse of encode. Throws CorruptStreamError for an empty stream or a code
// that is neither defined nor the entry about to be defined.
SymbolSequence decode(std::span<const Code> codes, const Alphabet& alphabet);

}  // namespace lzc

#include "lzc/lzw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "lzc/error.hpp"

namespace lzc {

namespace {

constexpr Code kNone = std::numeric_limits<Code>::max();

// Prefix tree keyed by (parent code, next symbol). Small alphabets use a
// dense child table; larger ones fall back to hashing the pair.
class Trie {
 public:
  explicit Trie(std::size_t alphabet_size, std::size_t expected_nodes)
      : alphabet_size_(alphabet_size), dense_(alphabet_size <= kDenseLimit) {
    if (dense_) children_.reserve(expected_nodes * alphabet_size);
    size_ = alphabet_size;
    if (dense_) children_.assign(alphabet_size * alphabet_size, kNone);
  }

  std::size_t size() const noexcept { return size_; }

  Code child(Code parent, Symbol s) const {
    if (dense_) return children_[static_cast<std::size_t>(parent) * alphabet_size_ + s];
    const auto it = sparse_.find(key(parent, s));
    return it == sparse_.end() ? kNone : it->second;
  }

  void insert(Code parent, Symbol s) {
    const auto code = static_cast<Code>(size_++);
    if (dense_) {
      children_[static_cast<std::size_t>(parent) * alphabet_size_ + s] = code;
      children_.resize(children_.size() + alphabet_size_, kNone);
    } else {
      sparse_.emplace(key(parent, s), code);
    }
  }

 private:
  static constexpr std::size_t kDenseLimit = 16;

  std::uint64_t key(Code parent, Symbol s) const {
    return (static_cast<std::uint64_t>(parent) << 32) | s;
  }

  std::size_t alphabet_size_;
  bool dense_;
  std::size_t size_ = 0;
  std::vector<Code> children_;
  std::unordered_map<std::uint64_t, Code> sparse_;
};

}  // namespace

LzwResult encode(const SymbolSequence& seq) {
  const std::size_t n = seq.size();
  const std::size_t a = seq.alphabet_size();
  if (n == 0) throw EmptyInputError("cannot encode an empty sequence");
  if (a + n >= kNone) throw InvalidParameterError("sequence too long for 32-bit codes");

  const auto data = seq.data();
  // Rough phrase-count guess to limit reallocation: n / log2(n).
  const auto guess = static_cast<std::size_t>(static_cast<double>(n) / std::max(1.0, std::log2(n))) + a;
  Trie trie(a, guess);

  LzwResult r;
  r.alphabet_size = a;
  r.codes.reserve(guess);

  std::size_t i = 0;
  while (i < n) {
    if (data[i] >= a) throw InvalidParameterError("symbol outside alphabet");
    Code w = data[i++];
    while (i < n) {
      const Code next = trie.child(w, data[i]);
      if (next == kNone) break;
      w = next;
      ++i;
    }
    r.codes.push_back(w);
    if (i < n) trie.insert(w, data[i]);
  }

  r.phrase_count = r.codes.size();
  r.dict_size = trie.size();
  r.description_length_bits = description_length(r.codes);
  r.bound_bits = description_length_bound(r.phrase_count, a);
  return r;
}

double description_length(std::span<const Code> codes) {
  Code max_code = 0;
  for (Code c : codes) max_code = std::max(max_code, c);
  const double m = std::max(2.0, static_cast<double>(max_code));
  const double width = std::log2(m);
  return std::log2(width) + static_cast<double>(codes.size()) * width;
}

double description_length_bound(std::size_t phrase_count, std::size_t alphabet_size) {
  const double c = static_cast<double>(phrase_count);
  return c * std::log2(c + std::log2(static_cast<double>(alphabet_size)));
}

SymbolSequence decode(std::span<const Code> codes, const Alphabet& alphabet) {
  if (codes.empty()) throw CorruptStreamError("empty code stream");
  const std::size_t a = alphabet.size();

  // Entry e is prefix[e] followed by last[e]; first[e] caches its first symbol.
  std::vector<Code> prefix;
  std::vector<Symbol> last;
  std::vector<Symbol> first;
  std::vector<std::size_t> length;
  prefix.reserve(a + codes.size());
  last.reserve(a + codes.size());
  first.reserve(a + codes.size());
  length.reserve(a + codes.size());
  for (std::size_t s = 0; s < a; ++s) {
    prefix.push_back(kNone);
    last.push_back(static_cast<Symbol>(s));
    first.push_back(static_cast<Symbol>(s));
    length.push_back(1);
  }

  std::vector<Symbol> out;
  auto append = [&](Code e) {
    const std::size_t start = out.size();
    out.resize(start + length[e]);
    for (std::size_t pos = start + length[e]; e != kNone; e = prefix[e]) out[--pos] = last[e];
  };

  if (codes[0] >= a) {
    throw CorruptStreamError("first code " + std::to_string(codes[0]) + " is not a single symbol");
  }
  append(codes[0]);
  Code prev = codes[0];

  for (std::size_t k = 1; k < codes.size(); ++k) {
    const Code code = codes[k];
    const std::size_t next_free = prefix.size();
    if (code > next_free) {
      throw CorruptStreamError("code " + std::to_string(code) + " at position " +
                               std::to_string(k) + " is undefined");
    }
    // When code == next_free the phrase is prev + first(prev).
    const Symbol head = code == next_free ? first[prev] : first[code];
    prefix.push_back(prev);
    last.push_back(head);
    first.push_back(first[prev]);
    length.push_back(length[prev] + 1);
    append(code);
    prev = code;
  }
  return SymbolSequence(alphabet, std::move(out));
}

}  // namespace lzc

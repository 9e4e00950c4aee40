#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gtp/carrier.hpp"

namespace gtp {

struct Pair {
  int x = 0;
  int y = 0;
  auto operator<=>(const Pair&) const = default;
};

// A nonempty multiset of (x, y) pairs. Pairs are kept sorted by (x, y), so
// the stored sequence is the canonical linearization: two words are equal
// iff they have identical pair multiplicities.
class Word {
 public:
  explicit Word(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Pair> pairs_;
};

// Orders words by (size, canonical linearization); the global enumeration
// order used for representatives and tie-breaking.
bool canonical_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Multiset union; sizes add. Commutative and associative.
Word gamma(const Word& a, const Word& b);

bool word_within(const Word& w, const Carrier& X, const Carrier& Y);

// Number of words of size 1..bound over an alphabet of `alphabet` pairs.
std::uint64_t count_words(int alphabet, int bound);

// All words of size 1..bound over X x Y, in canonical order, each exactly
// once. Throws ResourceLimitError when the count exceeds `ceiling`.
std::vector<Word> enumerate_words(const Carrier& X, const Carrier& Y, int bound,
                                  std::size_t ceiling = 2'000'000);

// Textual syntax: "(x,y)+(x',y')" with labels resolved per carrier.
Word parse_word(const std::string& text, const Carrier& X, const Carrier& Y);
std::string format_word(const Word& w, const Carrier& X, const Carrier& Y);

}  // namespace gtp

#include "gtp/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gtp/error.hpp"

namespace gtp {

Word::Word(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("a word must have at least one pair");
  std::sort(pairs_.begin(), pairs_.end());
}

bool canonical_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.pairs() < b.pairs();
}

std::size_t WordHash::operator()(const Word& w) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const Pair& p : w.pairs()) {
    mix(static_cast<std::uint64_t>(p.x) + 0x9e37);
    mix(static_cast<std::uint64_t>(p.y) + 0x79b9);
  }
  return static_cast<std::size_t>(h);
}

Word gamma(const Word& a, const Word& b) {
  std::vector<Pair> ps = a.pairs();
  ps.insert(ps.end(), b.pairs().begin(), b.pairs().end());
  return Word(std::move(ps));
}

bool word_within(const Word& w, const Carrier& X, const Carrier& Y) {
  for (const Pair& p : w.pairs())
    if (p.x < 0 || p.x >= X.size() || p.y < 0 || p.y >= Y.size()) return false;
  return true;
}

std::uint64_t count_words(int alphabet, int bound) {
  // sum over k of C(alphabet + k - 1, k), saturating at uint64 max.
  std::uint64_t total = 0;
  for (int k = 1; k <= bound; ++k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
      const std::uint64_t num = static_cast<std::uint64_t>(alphabet) + i - 1;
      if (c > UINT64_MAX / num) return UINT64_MAX;
      c = c * num / i;
    }
    if (total > UINT64_MAX - c) return UINT64_MAX;
    total += c;
  }
  return total;
}

std::vector<Word> enumerate_words(const Carrier& X, const Carrier& Y, int bound,
                                  std::size_t ceiling) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  const int nx = X.size();
  const int ny = Y.size();
  const int alphabet = nx * ny;
  const std::uint64_t total = count_words(alphabet, bound);
  if (total > ceiling)
    throw ResourceLimitError("word universe has " + std::to_string(total) +
                             " words, exceeding the ceiling of " +
                             std::to_string(ceiling));

  auto pair_of = [ny](int code) { return Pair{code / ny, code % ny}; };

  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  // Non-decreasing code sequences of each length = multisets in canonical
  // (size, lexicographic) order.
  for (int k = 1; k <= bound; ++k) {
    std::vector<int> codes(k, 0);
    while (true) {
      std::vector<Pair> ps;
      ps.reserve(k);
      for (int code : codes) ps.push_back(pair_of(code));
      out.push_back(Word(std::move(ps)));
      int i = k - 1;
      while (i >= 0 && codes[i] == alphabet - 1) --i;
      if (i < 0) break;
      const int next = codes[i] + 1;
      for (int j = i; j < k; ++j) codes[j] = next;
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

Word parse_word(const std::string& text, const Carrier& X, const Carrier& Y) {
  std::vector<Pair> ps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find('(', pos);
    if (open == std::string::npos) break;
    std::size_t comma = text.find(',', open);
    std::size_t close = text.find(')', open);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw ConfigError("malformed pair in word: \"" + text + "\"");
    const std::string xl = trim(text.substr(open + 1, comma - open - 1));
    const std::string yl = trim(text.substr(comma + 1, close - comma - 1));
    const int xi = X.index_of_label(xl);
    const int yi = Y.index_of_label(yl);
    if (xi < 0) throw ConfigError("unknown X element \"" + xl + "\" in word");
    if (yi < 0) throw ConfigError("unknown Y element \"" + yl + "\" in word");
    ps.push_back(Pair{xi, yi});
    pos = close + 1;
    std::size_t plus = text.find_first_not_of(" \t", pos);
    if (plus == std::string::npos) break;
    if (text[plus] != '+')
      throw ConfigError("expected '+' between pairs in word: \"" + text + "\"");
    pos = plus + 1;
  }
  if (ps.empty()) throw ConfigError("word must contain at least one pair");
  return Word(std::move(ps));
}

std::string format_word(const Word& w, const Carrier& X, const Carrier& Y) {
  std::ostringstream out;
  bool first = true;
  for (const Pair& p : w.pairs()) {
    if (!first) out << "+";
    first = false;
    out << "(" << X.labels[p.x] << "," << Y.labels[p.y] << ")";
  }
  return out.str();
}

}  // namespace gtp

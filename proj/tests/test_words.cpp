#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "gtp/error.hpp"
#include "gtp/words.hpp"

using namespace gtp;

TEST_CASE("gamma is multiset union with additive size") {
  const Word a({{0, 0}});
  const Word b({{1, 1}});
  const Word ab = gamma(a, b);
  CHECK(ab.size() == 2);
  CHECK(ab == Word({{0, 0}, {1, 1}}));
  CHECK(gamma(a, b) == gamma(b, a));
}

TEST_CASE("gamma keeps duplicate pairs with multiplicity") {
  const Word a({{0, 0}});
  const Word d = gamma(a, a);
  CHECK(d.size() == 2);
  CHECK(d == Word({{0, 0}, {0, 0}}));
}

TEST_CASE("gamma is associative") {
  const Word a({{0, 0}});
  const Word b({{0, 1}});
  const Word c({{1, 0}});
  CHECK(gamma(gamma(a, b), c) == gamma(a, gamma(b, c)));
}

TEST_CASE("the empty word is unrepresentable") {
  CHECK_THROWS_AS(Word({}), std::invalid_argument);
}

TEST_CASE("word equality is multiset equality, order-blind") {
  CHECK(Word({{1, 0}, {0, 1}}) == Word({{0, 1}, {1, 0}}));
  CHECK_FALSE(Word({{0, 1}}) == Word({{1, 0}}));
  CHECK_FALSE(Word({{0, 0}}) == Word({{0, 0}, {0, 0}}));
}

TEST_CASE("enumeration counts match the multiset formula") {
  const Carrier x = make_chain(2);
  const Carrier y = make_chain(2);
  CHECK(enumerate_words(x, y, 1).size() == 4);
  // 4 singletons plus C(5,2) size-two multisets
  CHECK(count_words(4, 2) == 14);
  CHECK(enumerate_words(x, y, 2).size() == 14);
}

TEST_CASE("enumeration against a direct brute-force recount") {
  const Carrier x = make_chain(2);
  const Carrier y = make_chain(3);
  const auto words = enumerate_words(x, y, 3);
  // brute force: all sorted pair sequences of length <= 3
  std::set<std::vector<Pair>> expected;
  std::vector<Pair> alphabet;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) alphabet.push_back({a, b});
  for (const Pair& p : alphabet) expected.insert({p});
  for (const Pair& p : alphabet)
    for (const Pair& q : alphabet) {
      std::vector<Pair> v{p, q};
      std::sort(v.begin(), v.end());
      expected.insert(v);
    }
  for (const Pair& p : alphabet)
    for (const Pair& q : alphabet)
      for (const Pair& r : alphabet) {
        std::vector<Pair> v{p, q, r};
        std::sort(v.begin(), v.end());
        expected.insert(v);
      }
  CHECK(words.size() == expected.size());
  for (const Word& w : words) CHECK(expected.count(w.pairs()) == 1);
}

TEST_CASE("enumeration is strictly sorted and duplicate-free") {
  const Carrier x = make_chain(2);
  const Carrier y = make_chain(2);
  const auto words = enumerate_words(x, y, 3);
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(canonical_less(words[i - 1], words[i]));
  }
}

TEST_CASE("enumeration respects the resource ceiling") {
  const Carrier x = make_chain(3);
  const Carrier y = make_chain(3);
  CHECK_THROWS_AS(enumerate_words(x, y, 5, 100), ResourceLimitError);
}

TEST_CASE("word syntax round-trips through parse and format") {
  const Carrier x = make_chain(2);
  const Carrier y = make_chain(2);
  const Word w = parse_word("(1,0)+(0,1)", x, y);
  CHECK(w == Word({{0, 1}, {1, 0}}));
  CHECK(format_word(w, x, y) == "(0,1)+(1,0)");  // canonical linearization
  CHECK(parse_word(format_word(w, x, y), x, y) == w);
}

TEST_CASE("word syntax rejects unknown labels and malformed input") {
  const Carrier x = make_chain(2);
  const Carrier y = make_chain(2);
  CHECK_THROWS_AS(parse_word("(2,0)", x, y), ConfigError);
  CHECK_THROWS_AS(parse_word("(0;1)", x, y), ConfigError);
  CHECK_THROWS_AS(parse_word("", x, y), ConfigError);
  CHECK_THROWS_AS(parse_word("(0,0)(1,1)", x, y), ConfigError);
}

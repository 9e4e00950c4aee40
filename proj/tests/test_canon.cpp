#include <doctest.h>

#include <stdexcept>

#include "gtp/canon.hpp"
#include "gtp/quotient.hpp"

using namespace gtp;

TEST_CASE("family rule systems demand the right carrier structure") {
  const Carrier chain = make_chain(2);
  const Carrier plain = make_plain(2);
  const Carrier z5 = make_modring(5);
  CHECK_NOTHROW(family_rules(FamilyKind::MinMinChain, chain, chain));
  CHECK_THROWS_AS(family_rules(FamilyKind::MinMinChain, plain, chain),
                  std::invalid_argument);
  CHECK_NOTHROW(family_rules(FamilyKind::LambdaLambda, plain, plain));
  CHECK_NOTHROW(family_rules(FamilyKind::Midpoint, z5, z5));
  CHECK_THROWS_AS(family_rules(FamilyKind::Midpoint, make_modring(4), z5),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_rules(FamilyKind::MinMinLattice, plain, plain),
                  std::invalid_argument);
}

TEST_CASE("dominance on chains needs a shared coordinate") {
  const Carrier c = make_chain(2);
  const DominancePredicate dom = DominancePredicate::build(c, c);
  CHECK(dom.dominates({0, 0}, {0, 1}));
  CHECK(dom.dominates({0, 0}, {1, 0}));
  CHECK_FALSE(dom.dominates({0, 1}, {1, 0}));
  CHECK(dom.incomparable({0, 1}, {1, 0}));
  CHECK(dom.dominates({0, 0}, {0, 0}));  // reflexive
}

TEST_CASE("dominance is reflexive and antisymmetric on every pair") {
  const Carrier x = make_chain(3);
  const Carrier y = make_chain(2);
  const DominancePredicate dom = DominancePredicate::build(x, y);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b) {
      const Pair p{a, b};
      CHECK(dom.dominates(p, p));
      for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const Pair q{a2, b2};
          if (dom.dominates(p, q) && dom.dominates(q, p)) CHECK(p == q);
        }
    }
}

TEST_CASE("path-freeness on the two-chain") {
  const Carrier c = make_chain(2);
  CHECK(freeness(Word({{0, 1}, {1, 0}}), FamilyKind::MinMinChain, c, c));
  CHECK_FALSE(freeness(Word({{0, 0}, {0, 1}}), FamilyKind::MinMinChain, c, c));
  CHECK_FALSE(freeness(Word({{0, 0}, {0, 0}}), FamilyKind::MinMinChain, c, c));
  CHECK(freeness(Word({{0, 0}}), FamilyKind::MinMinChain, c, c));
}

TEST_CASE("median-freeness on the five-ring") {
  const Carrier z5 = make_modring(5);
  CHECK_FALSE(
      freeness(Word({{0, 0}, {1, 1}, {2, 2}}), FamilyKind::Midpoint, z5, z5));
  CHECK(freeness(Word({{0, 0}, {1, 2}}), FamilyKind::Midpoint, z5, z5));
  CHECK(freeness(Word({{0, 3}, {2, 4}}), FamilyKind::Midpoint, z5, z5));
}

TEST_CASE("repetition-freeness forbids any shared coordinate") {
  const Carrier c = make_plain(3);
  CHECK(freeness(Word({{0, 1}, {1, 0}}), FamilyKind::LambdaLambda, c, c));
  CHECK_FALSE(freeness(Word({{0, 0}, {0, 1}}), FamilyKind::LambdaLambda, c, c));
  CHECK_FALSE(freeness(Word({{0, 0}, {1, 0}}), FamilyKind::LambdaLambda, c, c));
}

TEST_CASE("chain canonicalization absorbs dominated pairs") {
  const Carrier c = make_chain(2);
  CHECK(canonicalize(Word({{0, 0}, {0, 1}}), FamilyKind::MinMinChain, c, c) ==
        Word({{0, 0}}));
  CHECK(canonicalize(Word({{0, 1}, {1, 0}}), FamilyKind::MinMinChain, c, c) ==
        Word({{0, 1}, {1, 0}}));
}

TEST_CASE("lattice canonicalization merges fibers into meets") {
  const std::vector<std::vector<int>> meet = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  const Carrier d = make_lattice({"0", "a", "b", "1"}, meet);
  // (a,y) and (b,y) merge to (a/\b, y) = (0, y)
  CHECK(canonicalize(Word({{1, 0}, {2, 0}}), FamilyKind::MinMinLattice, d, d) ==
        Word({{0, 0}}));
}

TEST_CASE("projection canonicalization keeps the smaller element") {
  const Carrier c = make_plain(3);
  CHECK(canonicalize(Word({{0, 1}, {1, 1}}), FamilyKind::LambdaLambda, c, c) ==
        Word({{0, 1}}));
  CHECK(canonicalize(Word({{2, 0}, {2, 2}}), FamilyKind::LambdaLambda, c, c) ==
        Word({{2, 0}}));
}

TEST_CASE("midpoint canonicalization merges same-fiber pairs") {
  const Carrier z5 = make_modring(5);
  CHECK(canonicalize(Word({{1, 2}, {3, 2}}), FamilyKind::Midpoint, z5, z5) ==
        Word({{2, 2}}));
}

TEST_CASE("midpoint canonicalization resolves cross-fiber median triples") {
  const Carrier z5 = make_modring(5);
  // 2*1 = 0 + 2: no fiber is shared, yet the triple is reducible
  const Word w({{0, 0}, {1, 1}, {2, 2}});
  const Word c = canonicalize(w, FamilyKind::Midpoint, z5, z5);
  CHECK(c.size() < w.size());
  CHECK(freeness(c, FamilyKind::Midpoint, z5, z5));
  // the reduction is sound: both words sit in one saturation class
  const RuleSystem rules = family_rules(FamilyKind::Midpoint, z5, z5);
  const ClassIndex idx = saturate(z5, z5, rules, 4, {.stability_check = false});
  CHECK(equivalent(w, c, idx));
}

TEST_CASE("canonicalization is idempotent, size-monotone, and freeness-true") {
  struct Case {
    FamilyKind family;
    Carrier x, y;
  };
  const std::vector<std::vector<int>> meet = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  const std::vector<Case> cases = {
      {FamilyKind::MinMinChain, make_chain(3), make_chain(2)},
      {FamilyKind::MinMinLattice, make_lattice({"0", "a", "b", "1"}, meet),
       make_chain(2)},
      {FamilyKind::LambdaLambda, make_plain(3), make_plain(3)},
      {FamilyKind::Midpoint, make_modring(5), make_modring(3)},
  };
  for (const Case& tc : cases) {
    for (const Word& w : enumerate_words(tc.x, tc.y, 3)) {
      const Word c = canonicalize(w, tc.family, tc.x, tc.y);
      CHECK(c.size() <= w.size());
      CHECK(canonicalize(c, tc.family, tc.x, tc.y) == c);
      CHECK(freeness(c, tc.family, tc.x, tc.y));
    }
  }
}

TEST_CASE("canonical forms stay within their saturation class (chain family)") {
  const Carrier c3 = make_chain(3);
  const CanonAuditReport r = canon_oracle_audit(FamilyKind::MinMinChain, c3, c3, 3,
                                                {.stability_check = false});
  CHECK(r.words_checked == 219);
  CHECK(r.sound == r.words_checked);
  CHECK(r.unsound == 0);
  CHECK(r.free_outputs == r.words_checked);
  CHECK(r.idempotent == r.words_checked);
}

TEST_CASE("canonical forms stay within their saturation class (midpoint, bound 2)") {
  const Carrier z5 = make_modring(5);
  const CanonAuditReport r =
      canon_oracle_audit(FamilyKind::Midpoint, z5, z5, 2, {.stability_check = false});
  CHECK(r.sound == r.words_checked);
  CHECK(r.unsound == 0);
}

TEST_CASE("the projection family collapses every class onto singletons") {
  const Carrier c = make_plain(2);
  const CanonAuditReport r = canon_oracle_audit(FamilyKind::LambdaLambda, c, c, 3);
  CHECK(r.stable);
  CHECK(r.sound == r.words_checked);
  // repetition-free canonical forms of size two exist, yet every class is
  // separable: the size criterion over-predicts entanglement here
  CHECK(r.separable_with_large_canonical > 0);
  CHECK(r.verdict_disagree > 0);
}

TEST_CASE("uniqueness of free forms fails for the chain family and is recorded") {
  const Carrier c2 = make_chain(2);
  const CanonAuditReport r = canon_oracle_audit(FamilyKind::MinMinChain, c2, c2, 4);
  // (0,0) and (0,0)+(1,1) are both path-free and sit in one class
  CHECK(r.classes_with_multiple_free_members > 0);
}

TEST_CASE("family and carrier mismatches are rejected") {
  const Carrier chain = make_chain(2);
  const Carrier z5 = make_modring(5);
  CHECK_THROWS_AS(canonicalize(Word({{0, 0}}), FamilyKind::Midpoint, chain, chain),
                  std::invalid_argument);
  CHECK_THROWS_AS(freeness(Word({{4, 4}}), FamilyKind::MinMinChain, chain, chain),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(Word({{0, 4}}), FamilyKind::MinMinChain, chain, chain),
                  std::invalid_argument);
  CHECK_NOTHROW(freeness(Word({{4, 4}}), FamilyKind::Midpoint, z5, z5));
}

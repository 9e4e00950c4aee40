#include "gtp/canon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gtp {

const char* to_string(FamilyKind f) {
  switch (f) {
    case FamilyKind::MinMinChain: return "min-min";
    case FamilyKind::MinMinLattice: return "lattice-min-min";
    case FamilyKind::LambdaLambda: return "lambda-lambda";
    case FamilyKind::Midpoint: return "midpoint";
  }
  return "?";
}

std::optional<FamilyKind> family_by_name(const std::string& name) {
  if (name == "min-min") return FamilyKind::MinMinChain;
  if (name == "lattice-min-min") return FamilyKind::MinMinLattice;
  if (name == "lambda-lambda") return FamilyKind::LambdaLambda;
  if (name == "midpoint") return FamilyKind::Midpoint;
  return std::nullopt;
}

namespace {

void require_family_carriers(FamilyKind f, const Carrier& X, const Carrier& Y) {
  switch (f) {
    case FamilyKind::MinMinChain:
      if (X.kind != CarrierKind::Chain || Y.kind != CarrierKind::Chain)
        throw std::invalid_argument("the min-min family requires chain carriers");
      break;
    case FamilyKind::MinMinLattice:
      if (!X.has_meet() || !Y.has_meet())
        throw std::invalid_argument(
            "the lattice family requires meet-semilattice carriers");
      break;
    case FamilyKind::LambdaLambda:
      break;
    case FamilyKind::Midpoint:
      if (X.kind != CarrierKind::ModRing || Y.kind != CarrierKind::ModRing)
        throw std::invalid_argument("the midpoint family requires modular-ring carriers");
      if (X.modulus % 2 == 0 || Y.modulus % 2 == 0)
        throw std::invalid_argument("the midpoint family requires odd moduli");
      break;
  }
}

int midpoint_of(int a, int b, int p) {
  const int inv2 = (p + 1) / 2;
  return (a + b) % p * inv2 % p;
}

}  // namespace

RuleSystem family_rules(FamilyKind f, const Carrier& X, const Carrier& Y) {
  require_family_carriers(f, X, Y);
  switch (f) {
    case FamilyKind::MinMinChain:
    case FamilyKind::MinMinLattice:
      return RuleSystem::make({lift_binary_op(builtin_op(BuiltinOp::Min, X))},
                              {lift_binary_op(builtin_op(BuiltinOp::Min, Y))});
    case FamilyKind::LambdaLambda:
      return RuleSystem::make({lift_binary_op(builtin_op(BuiltinOp::Lambda, X))},
                              {lift_binary_op(builtin_op(BuiltinOp::Lambda, Y))});
    case FamilyKind::Midpoint:
      return RuleSystem::make({midpoint_relation(X)}, {midpoint_relation(Y)});
  }
  throw std::invalid_argument("unknown family");
}

DominancePredicate DominancePredicate::build(const Carrier& X, const Carrier& Y) {
  return DominancePredicate{&X, &Y};
}

bool DominancePredicate::dominates(const Pair& p, const Pair& q) const {
  return (p.x == q.x && Y->leq(p.y, q.y)) || (X->leq(p.x, q.x) && p.y == q.y);
}

bool DominancePredicate::incomparable(const Pair& p, const Pair& q) const {
  return !dominates(p, q) && !dominates(q, p);
}

WedgePredicate WedgePredicate::build(const Carrier& X, const Carrier& Y) {
  return WedgePredicate{&X, &Y};
}

bool WedgePredicate::x_wedge(const Pair& base, const Pair& p, const Pair& q) const {
  return p.y == base.y && q.y == base.y && X->meet_of(p.x, q.x) == base.x;
}

bool WedgePredicate::y_wedge(const Pair& base, const Pair& p, const Pair& q) const {
  return p.x == base.x && q.x == base.x && Y->meet_of(p.y, q.y) == base.y;
}

bool WedgePredicate::wedge_related(const Pair& a, const Pair& b, const Pair& c) const {
  return x_wedge(a, b, c) || x_wedge(b, a, c) || x_wedge(c, a, b) ||
         y_wedge(a, b, c) || y_wedge(b, a, c) || y_wedge(c, a, b);
}

bool freeness(const Word& w, FamilyKind f, const Carrier& X, const Carrier& Y) {
  require_family_carriers(f, X, Y);
  if (!word_within(w, X, Y))
    throw std::invalid_argument("word does not fit the family carriers");
  const auto& ps = w.pairs();
  const int n = w.size();

  switch (f) {
    case FamilyKind::MinMinChain: {
      const DominancePredicate dom = DominancePredicate::build(X, Y);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && dom.dominates(ps[i], ps[j])) return false;
      return true;
    }
    case FamilyKind::MinMinLattice: {
      const WedgePredicate wedge = WedgePredicate::build(X, Y);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            if (wedge.wedge_related(ps[i], ps[j], ps[k])) return false;
      return true;
    }
    case FamilyKind::LambdaLambda: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (ps[i].x == ps[j].x || ps[i].y == ps[j].y) return false;
      return true;
    }
    case FamilyKind::Midpoint: {
      const int px = X.modulus;
      const int py = Y.modulus;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            if (i == j || i == k) continue;
            if (2 * ps[i].x % px == (ps[j].x + ps[k].x) % px) return false;
            if (2 * ps[i].y % py == (ps[j].y + ps[k].y) % py) return false;
          }
      return true;
    }
  }
  return false;
}

namespace {

// One deterministic reduction pass; true when a step fired. Scans pair
// occurrences in canonical order and applies the first applicable step.
bool reduce_once(std::vector<Pair>& ps, FamilyKind f, const Carrier& X,
                 const Carrier& Y) {
  const int n = static_cast<int>(ps.size());

  auto erase_at = [&](int i) { ps.erase(ps.begin() + i); };
  auto replace_two = [&](int i, int j, Pair merged) {
    // j > i
    ps.erase(ps.begin() + j);
    ps.erase(ps.begin() + i);
    ps.push_back(merged);
    std::sort(ps.begin(), ps.end());
  };

  switch (f) {
    case FamilyKind::MinMinChain: {
      const DominancePredicate dom = DominancePredicate::build(X, Y);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          if (i != j && dom.dominates(ps[i], ps[j])) {
            erase_at(j);
            return true;
          }
      return false;
    }
    case FamilyKind::MinMinLattice: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (ps[i].y == ps[j].y) {
            replace_two(i, j, Pair{X.meet_of(ps[i].x, ps[j].x), ps[i].y});
            return true;
          }
          if (ps[i].x == ps[j].x) {
            replace_two(i, j, Pair{ps[i].x, Y.meet_of(ps[i].y, ps[j].y)});
            return true;
          }
        }
      return false;
    }
    case FamilyKind::LambdaLambda: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          // Both directions of the projection rule are legal; keep the
          // canonically smaller element.
          if (ps[i].y == ps[j].y) {
            replace_two(i, j, Pair{std::min(ps[i].x, ps[j].x), ps[i].y});
            return true;
          }
          if (ps[i].x == ps[j].x) {
            replace_two(i, j, Pair{ps[i].x, std::min(ps[i].y, ps[j].y)});
            return true;
          }
        }
      return false;
    }
    case FamilyKind::Midpoint: {
      const int px = X.modulus;
      const int py = Y.modulus;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (ps[i].y == ps[j].y) {
            replace_two(i, j, Pair{midpoint_of(ps[i].x, ps[j].x, px), ps[i].y});
            return true;
          }
          if (ps[i].x == ps[j].x) {
            replace_two(i, j, Pair{ps[i].x, midpoint_of(ps[i].y, ps[j].y, py)});
            return true;
          }
        }
      // Median triples survive fiber merges: resolve 2 x_i = x_j + x_k by
      // expanding pair i into the (x_j, x_k) fiber pair and merging each
      // into its namesake; net one pair fewer, three rule applications.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            if (i == j || i == k) continue;
            if (2 * ps[i].x % px == (ps[j].x + ps[k].x) % px) {
              const Pair a{ps[j].x, midpoint_of(ps[i].y, ps[j].y, py)};
              const Pair b{ps[k].x, midpoint_of(ps[i].y, ps[k].y, py)};
              std::vector<Pair> next;
              for (int t = 0; t < n; ++t)
                if (t != i && t != j && t != k) next.push_back(ps[t]);
              next.push_back(a);
              next.push_back(b);
              std::sort(next.begin(), next.end());
              ps = std::move(next);
              return true;
            }
            if (2 * ps[i].y % py == (ps[j].y + ps[k].y) % py) {
              const Pair a{midpoint_of(ps[i].x, ps[j].x, px), ps[j].y};
              const Pair b{midpoint_of(ps[i].x, ps[k].x, px), ps[k].y};
              std::vector<Pair> next;
              for (int t = 0; t < n; ++t)
                if (t != i && t != j && t != k) next.push_back(ps[t]);
              next.push_back(a);
              next.push_back(b);
              std::sort(next.begin(), next.end());
              ps = std::move(next);
              return true;
            }
          }
      return false;
    }
  }
  return false;
}

}  // namespace

Word canonicalize(const Word& w, FamilyKind f, const Carrier& X, const Carrier& Y) {
  require_family_carriers(f, X, Y);
  if (!word_within(w, X, Y))
    throw std::invalid_argument("word does not fit the family carriers");
  std::vector<Pair> ps = w.pairs();
  while (reduce_once(ps, f, X, Y)) {
  }
  return Word(std::move(ps));
}

CanonAuditReport canon_oracle_audit(FamilyKind f, const Carrier& X, const Carrier& Y,
                                    int bound, const SaturateOptions& options) {
  const RuleSystem rules = family_rules(f, X, Y);
  const ClassIndex idx = saturate(X, Y, rules, bound, options);

  CanonAuditReport report;
  report.family = f;
  report.bound = bound;
  report.stable = idx.stability_checked && idx.stable;

  std::map<int, std::set<std::vector<Pair>>> free_members;
  const int n = static_cast<int>(idx.universe->words.size());
  for (int i = 0; i < n; ++i) {
    const Word& w = idx.universe->words[i];
    report.words_checked += 1;
    const Word c = canonicalize(w, f, X, Y);

    if (equivalent(w, c, idx))
      report.sound += 1;
    else
      report.unsound += 1;
    if (freeness(c, f, X, Y)) report.free_outputs += 1;
    if (canonicalize(c, f, X, Y) == c) report.idempotent += 1;
    if (freeness(w, f, X, Y)) free_members[idx.class_of[i]].insert(w.pairs());

    const bool predicted_entangled = c.size() >= 2;
    const bool oracle_entangled = !idx.classes[idx.class_of[i]].has_singleton;
    if (predicted_entangled == oracle_entangled)
      report.verdict_agree += 1;
    else
      report.verdict_disagree += 1;
    if (predicted_entangled && !oracle_entangled && freeness(c, f, X, Y))
      report.separable_with_large_canonical += 1;
  }
  for (const auto& [cls, members] : free_members)
    if (members.size() > 1) report.classes_with_multiple_free_members += 1;
  return report;
}

}  // namespace gtp

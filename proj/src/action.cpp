#include "gtp/action.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gtp {

Word induced_action(const Perm& g, const Perm& h, const Word& w) {
  std::vector<Pair> ps;
  ps.reserve(w.pairs().size());
  for (const Pair& p : w.pairs()) ps.push_back(Pair{g[p.x], h[p.y]});
  return Word(std::move(ps));
}

std::vector<Word> orbit(const Word& w, const PermAction& gx, const PermAction& hy) {
  auto less = [](const Word& a, const Word& b) { return canonical_less(a, b); };
  std::set<Word, decltype(less)> out(less);
  for (const Perm& g : gx.elements)
    for (const Perm& h : hy.elements) out.insert(induced_action(g, h, w));
  return {out.begin(), out.end()};
}

namespace {

void require_compatible(const PermAction& gx, const PermAction& hy,
                        const RuleSystem& rules) {
  for (std::size_t i = 0; i < rules.x_rules.size(); ++i) {
    const CompatReport r = compatibility_check(gx, rules.x_rules[i]);
    if (!r.ok)
      throw std::invalid_argument("X rule " + std::to_string(i) +
                                  " is not compatible with the action on X: " +
                                  r.counterexample);
  }
  for (std::size_t i = 0; i < rules.y_rules.size(); ++i) {
    const CompatReport r = compatibility_check(hy, rules.y_rules[i]);
    if (!r.ok)
      throw std::invalid_argument("Y rule " + std::to_string(i) +
                                  " is not compatible with the action on Y: " +
                                  r.counterexample);
  }
}

void check_action_carriers(const PermAction& gx, const PermAction& hy,
                           const ClassIndex& idx) {
  if (!(gx.carrier == idx.X) || !(hy.carrier == idx.Y))
    throw std::invalid_argument("action carriers do not match the saturated factors");
}

}  // namespace

std::vector<ActionAuditViolation> well_defined_audit(const PermAction& gx,
                                                     const PermAction& hy,
                                                     const RuleSystem& rules,
                                                     const ClassIndex& idx) {
  check_action_carriers(gx, hy, idx);
  require_compatible(gx, hy, rules);

  std::vector<ActionAuditViolation> violations;
  const WordUniverse& u = *idx.universe;
  const int n = static_cast<int>(u.words.size());
  for (int i = 0; i < n; ++i) {
    const Word& w = u.words[i];
    for (const Word& nb : rewrite_neighbors(w, rules, idx.bound)) {
      const int j = u.index_of(nb);
      if (j < i) continue;  // each undirected edge audited once
      for (const Perm& g : gx.elements)
        for (const Perm& h : hy.elements) {
          const Word iw = induced_action(g, h, w);
          const Word in = induced_action(g, h, nb);
          if (idx.class_of_word(iw) != idx.class_of_word(in)) {
            std::ostringstream msg;
            msg << "edge " << format_word(w, idx.X, idx.Y) << " ~ "
                << format_word(nb, idx.X, idx.Y)
                << " maps to words in different classes: "
                << format_word(iw, idx.X, idx.Y) << " vs "
                << format_word(in, idx.X, idx.Y);
            violations.push_back({msg.str()});
          }
        }
    }
  }
  return violations;
}

std::vector<ActionAuditViolation> invariance_audit(const PermAction& gx,
                                                   const PermAction& hy,
                                                   const ClassIndex& idx) {
  check_action_carriers(gx, hy, idx);
  require_compatible(gx, hy, idx.rules);

  std::vector<ActionAuditViolation> violations;
  for (const ClassInfo& info : idx.classes) {
    const Word rep = class_representative(info.id, idx);
    const EntanglementVerdict base = is_entangled(rep, idx);
    for (const Perm& g : gx.elements)
      for (const Perm& h : hy.elements) {
        const Word image = induced_action(g, h, rep);
        const EntanglementVerdict moved = is_entangled(image, idx);
        if (moved.status != base.status) {
          std::ostringstream msg;
          msg << format_word(rep, idx.X, idx.Y) << " is " << to_string(base.status)
              << " but its image " << format_word(image, idx.X, idx.Y) << " is "
              << to_string(moved.status);
          violations.push_back({msg.str()});
        }
      }
  }
  return violations;
}

}  // namespace gtp

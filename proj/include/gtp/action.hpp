#pragma once

#include <string>
#include <vector>

#include "gtp/engine.hpp"
#include "gtp/perm.hpp"
#include "gtp/quotient.hpp"

namespace gtp {

// Pairwise image of the word under (g, h); size preserved.
Word induced_action(const Perm& g, const Perm& h, const Word& w);

// {(g,h)w : g in G, h in H}, in canonical order.
std::vector<Word> orbit(const Word& w, const PermAction& gx, const PermAction& hy);

struct ActionAuditViolation {
  std::string description;
};

// Refuses (std::invalid_argument) unless every rule is compatible with its
// side's action; under that precondition the class partition must be
// action-invariant, and the audit lists every rewrite edge whose endpoint
// images land in different classes (expected: none).
std::vector<ActionAuditViolation> well_defined_audit(const PermAction& gx,
                                                     const PermAction& hy,
                                                     const RuleSystem& rules,
                                                     const ClassIndex& idx);

// Checks that the separable/entangled verdict is constant on orbits: for
// every class representative w and every (g, h), verdict((g,h)w) must equal
// verdict(w). Same compatibility precondition as well_defined_audit.
std::vector<ActionAuditViolation> invariance_audit(const PermAction& gx,
                                                   const PermAction& hy,
                                                   const ClassIndex& idx);

}  // namespace gtp

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gtp/engine.hpp"

namespace gtp {

enum class Entanglement { Separable, EntangledAtBound };

const char* to_string(Entanglement e);

struct EntanglementVerdict {
  int class_id = 0;
  Entanglement status = Entanglement::Separable;
  int bound = 0;
  bool stable = false;
};

// Separable iff the word's class contains a singleton. Entangled verdicts
// are qualified by the bound and stability flag: more rewriting above the
// bound could still reach a singleton unless stability holds.
EntanglementVerdict is_entangled(const Word& w, const ClassIndex& idx);

struct Census {
  int classes = 0;
  int separable = 0;
  int entangled = 0;
  // (class member count, number of classes with that count), ascending.
  std::vector<std::pair<int, int>> histogram;
};

Census census(const ClassIndex& idx);

struct RefinementReport {
  bool ok = true;
  // Two words in one `small` class but different `big` classes.
  std::optional<std::pair<Word, Word>> counterexample;
};

// Checks that every class of `small` (fewer rules) is contained in a single
// class of `big` (more rules) on the same universe: the canonical surjection
// between the two quotients is well defined.
RefinementReport refinement_check(const ClassIndex& small, const ClassIndex& big);

// The member minimal under (size, canonical linearization).
Word class_representative(int class_id, const ClassIndex& idx);

}  // namespace gtp

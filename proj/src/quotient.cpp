#include "gtp/quotient.hpp"

#include <map>
#include <stdexcept>

namespace gtp {

const char* to_string(Entanglement e) {
  return e == Entanglement::Separable ? "separable" : "entangled-at-bound";
}

EntanglementVerdict is_entangled(const Word& w, const ClassIndex& idx) {
  EntanglementVerdict v;
  v.class_id = idx.class_of_word(w);
  v.status = idx.classes[v.class_id].has_singleton ? Entanglement::Separable
                                                   : Entanglement::EntangledAtBound;
  v.bound = idx.bound;
  v.stable = idx.stability_checked && idx.stable;
  return v;
}

Census census(const ClassIndex& idx) {
  Census c;
  c.classes = idx.class_count();
  std::map<int, int> hist;
  for (const ClassInfo& info : idx.classes) {
    if (info.has_singleton)
      c.separable += 1;
    else
      c.entangled += 1;
    hist[info.members] += 1;
  }
  c.histogram.assign(hist.begin(), hist.end());
  return c;
}

RefinementReport refinement_check(const ClassIndex& small, const ClassIndex& big) {
  if (!(small.X == big.X) || !(small.Y == big.Y))
    throw std::invalid_argument("refinement requires identical carriers");
  if (small.bound != big.bound)
    throw std::invalid_argument("refinement requires identical bounds");
  if (!rules_subset(small.rules, big.rules))
    throw std::invalid_argument(
        "refinement requires the first rule system to be contained in the second");

  const int n = static_cast<int>(small.universe->words.size());
  // first member seen per small class, to report a concrete witness pair
  std::vector<int> seen(small.class_count(), -1);
  for (int i = 0; i < n; ++i) {
    const int sc = small.class_of[i];
    if (seen[sc] < 0) {
      seen[sc] = i;
    } else if (big.class_of[seen[sc]] != big.class_of[i]) {
      return {false,
              std::make_pair(small.universe->words[seen[sc]], small.universe->words[i])};
    }
  }
  return {true, std::nullopt};
}

Word class_representative(int class_id, const ClassIndex& idx) {
  if (class_id < 0 || class_id >= idx.class_count())
    throw std::out_of_range("unknown class id " + std::to_string(class_id));
  return idx.universe->words[idx.classes[class_id].representative];
}

}  // namespace gtp

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gtp/rules.hpp"
#include "gtp/words.hpp"

namespace gtp {

// The truncated word space: all words of size <= bound in canonical order,
// with index lookup.
struct WordUniverse {
  Carrier X;
  Carrier Y;
  int bound = 0;
  std::vector<Word> words;
  std::unordered_map<Word, int, WordHash> pos;

  static WordUniverse build(const Carrier& X, const Carrier& Y, int bound,
                            std::size_t ceiling);
  // -1 when the word is not in the universe.
  int index_of(const Word& w) const;
};

struct ClassInfo {
  int id = 0;
  int members = 0;
  int min_word_size = 0;
  bool has_singleton = false;
  int representative = 0;  // universe index of the minimal member
};

// A partition of the bounded word space into rewrite-equivalence classes.
// Class ids are assigned in order of first member appearance, so they are
// reproducible run-to-run.
struct ClassIndex {
  Carrier X;
  Carrier Y;
  RuleSystem rules;
  int bound = 0;
  bool stability_checked = false;
  // True when the partition induced on words of size <= bound agrees with
  // the partition computed at bound+1. Only meaningful if stability_checked.
  bool stable = false;
  std::shared_ptr<const WordUniverse> universe;
  std::vector<int> class_of;
  std::vector<ClassInfo> classes;
  // Diagnostic only: whether this result was loaded from the disk cache.
  bool from_cache = false;

  int class_count() const { return static_cast<int>(classes.size()); }
  // Throws std::out_of_range for words outside the universe.
  int class_of_word(const Word& w) const;
};

struct SaturateOptions {
  bool stability_check = true;
  std::size_t max_words = 2'000'000;
  std::optional<std::filesystem::path> cache_dir;
};

// All words obtainable from w by one rule application in either direction,
// restricted to size <= bound, in canonical order. Symmetric: w' is a
// neighbor of w iff w is a neighbor of w' (when both fit the bound).
std::vector<Word> rewrite_neighbors(const Word& w, const RuleSystem& rules, int bound);

// Connected components of the rewrite graph on words of size <= bound.
ClassIndex saturate(const Carrier& X, const Carrier& Y, const RuleSystem& rules,
                    int bound, const SaturateOptions& options = {});

// Same class id; throws std::out_of_range for words outside the universe.
bool equivalent(const Word& a, const Word& b, const ClassIndex& idx);

// Content hash of (carriers, rules, bound, stability flag); the cache key.
std::string saturation_key(const Carrier& X, const Carrier& Y, const RuleSystem& rules,
                           int bound, bool stability_check);

}  // namespace gtp

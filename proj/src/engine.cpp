#include "gtp/engine.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gtp/error.hpp"

namespace gtp {

WordUniverse WordUniverse::build(const Carrier& X, const Carrier& Y, int bound,
                                 std::size_t ceiling) {
  WordUniverse u;
  u.X = X;
  u.Y = Y;
  u.bound = bound;
  u.words = enumerate_words(X, Y, bound, ceiling);
  u.pos.reserve(u.words.size() * 2);
  for (int i = 0; i < static_cast<int>(u.words.size()); ++i) u.pos.emplace(u.words[i], i);
  return u;
}

int WordUniverse::index_of(const Word& w) const {
  auto it = pos.find(w);
  return it == pos.end() ? -1 : it->second;
}

int ClassIndex::class_of_word(const Word& w) const {
  const int i = universe->index_of(w);
  if (i < 0)
    throw std::out_of_range("word of size " + std::to_string(w.size()) +
                            " is outside the universe at bound " + std::to_string(bound));
  return class_of[i];
}

bool equivalent(const Word& a, const Word& b, const ClassIndex& idx) {
  return idx.class_of_word(a) == idx.class_of_word(b);
}

namespace {

struct WordCanonicalLess {
  bool operator()(const Word& a, const Word& b) const { return canonical_less(a, b); }
};

// One rule, one side. For x-rules the fiber coordinate is y and the rule
// rewrites the x components; for y-rules the roles swap.
void apply_rule(const Word& w, const RelationalRule& rule, bool x_side, int bound,
                std::set<Word, WordCanonicalLess>& out) {
  const auto& ps = w.pairs();
  const int sz = w.size();

  // fiber value -> occurrence indices
  std::map<int, std::vector<int>> fibers;
  for (int i = 0; i < sz; ++i)
    fibers[x_side ? ps[i].y : ps[i].x].push_back(i);

  auto emit = [&](int fiber, const std::vector<int>& chosen,
                  const std::vector<std::vector<int>>& completions) {
    std::vector<bool> removed(sz, false);
    for (int i : chosen) removed[i] = true;
    std::vector<Pair> base;
    base.reserve(sz);
    for (int i = 0; i < sz; ++i)
      if (!removed[i]) base.push_back(ps[i]);
    for (const auto& values : completions) {
      if (static_cast<int>(base.size() + values.size()) > bound) continue;
      std::vector<Pair> next = base;
      for (int v : values)
        next.push_back(x_side ? Pair{v, fiber} : Pair{fiber, v});
      out.insert(Word(std::move(next)));
    }
  };

  // Ordered selections of k distinct occurrences within one fiber; the
  // selected values are matched against one side of the tuple set. Multiset
  // words make every tuple-internal order reachable, which is what the
  // permutation rule licenses.
  auto scan = [&](int k,
                  const std::map<std::vector<int>, std::vector<std::vector<int>>>& table) {
    for (const auto& entry : fibers) {
      const int fiber = entry.first;
      const std::vector<int>& occ = entry.second;
      if (static_cast<int>(occ.size()) < k) continue;
      std::vector<int> chosen;
      std::vector<int> key;
      std::vector<bool> used(occ.size(), false);
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(chosen.size()) == k) {
          auto it = table.find(key);
          if (it != table.end()) emit(fiber, chosen, it->second);
          return;
        }
        for (std::size_t i = 0; i < occ.size(); ++i) {
          if (used[i]) continue;
          used[i] = true;
          chosen.push_back(occ[i]);
          key.push_back(x_side ? ps[occ[i]].x : ps[occ[i]].y);
          self(self);
          used[i] = false;
          chosen.pop_back();
          key.pop_back();
        }
      };
      rec(rec);
    }
  };

  scan(rule.left_arity, rule.by_left);
  scan(rule.right_arity, rule.by_right);
}

}  // namespace

std::vector<Word> rewrite_neighbors(const Word& w, const RuleSystem& rules, int bound) {
  std::set<Word, WordCanonicalLess> out;
  for (const auto& r : rules.x_rules) apply_rule(w, r, true, bound, out);
  for (const auto& r : rules.y_rules) apply_rule(w, r, false, bound, out);
  out.erase(w);  // identity rewrites (e.g. op(a,a) = a) are not neighbors
  return {out.begin(), out.end()};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<int> compute_partition(const WordUniverse& u, const RuleSystem& rules) {
  const int n = static_cast<int>(u.words.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (const Word& nb : rewrite_neighbors(u.words[i], rules, u.bound)) {
      const int j = u.index_of(nb);
      if (j >= 0) uf.unite(i, j);
    }
  // Number classes by first appearance in canonical order.
  std::vector<int> class_of(n, -1);
  std::unordered_map<int, int> id_of_root;
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    auto it = id_of_root.find(root);
    if (it == id_of_root.end()) it = id_of_root.emplace(root, next++).first;
    class_of[i] = it->second;
  }
  return class_of;
}

void check_rules_match_carriers(const Carrier& X, const Carrier& Y,
                                const RuleSystem& rules) {
  if (!(rules.X == X) || !(rules.Y == Y))
    throw std::invalid_argument("rule system carriers do not match the factors");
}

nlohmann::json carrier_fingerprint(const Carrier& c) {
  nlohmann::json j;
  j["kind"] = to_string(c.kind);
  j["labels"] = c.labels;
  j["modulus"] = c.modulus;
  if (c.has_meet()) j["meet"] = c.meet;
  if (c.has_order()) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : c.order) rows.emplace_back(row.begin(), row.end());
    j["order"] = rows;
  }
  return j;
}

nlohmann::json rules_fingerprint(const std::vector<RelationalRule>& rules) {
  std::vector<nlohmann::json> items;
  for (const auto& r : rules) {
    nlohmann::json j;
    j["left"] = r.left_arity;
    j["right"] = r.right_arity;
    j["tuples"] = r.tuples;
    items.push_back(std::move(j));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.dump() < b.dump(); });
  return items;
}

constexpr int kCacheSchemaVersion = 1;

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace

std::string saturation_key(const Carrier& X, const Carrier& Y, const RuleSystem& rules,
                           int bound, bool stability_check) {
  nlohmann::json j;
  j["schema"] = kCacheSchemaVersion;
  j["x"] = carrier_fingerprint(X);
  j["y"] = carrier_fingerprint(Y);
  j["x_rules"] = rules_fingerprint(rules.x_rules);
  j["y_rules"] = rules_fingerprint(rules.y_rules);
  j["bound"] = bound;
  j["stability"] = stability_check;
  return j.dump();
}

ClassIndex saturate(const Carrier& X, const Carrier& Y, const RuleSystem& rules,
                    int bound, const SaturateOptions& options) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  check_rules_match_carriers(X, Y, rules);

  ClassIndex idx;
  idx.X = X;
  idx.Y = Y;
  idx.rules = rules;
  idx.bound = bound;
  idx.universe = std::make_shared<const WordUniverse>(
      WordUniverse::build(X, Y, bound, options.max_words));

  const std::string key = saturation_key(X, Y, rules, bound, options.stability_check);
  std::filesystem::path cache_file;
  if (options.cache_dir) {
    cache_file = *options.cache_dir /
                 ("sat-v" + std::to_string(kCacheSchemaVersion) + "-" + fnv1a_hex(key) +
                  ".json");
    std::ifstream in(cache_file);
    if (in) {
      nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
      if (!j.is_discarded() && j.value("schema", -1) == kCacheSchemaVersion &&
          j.value("key", "") == key &&
          j.value("class_of", std::vector<int>{}).size() == idx.universe->words.size()) {
        idx.class_of = j["class_of"].get<std::vector<int>>();
        idx.stability_checked = j.value("stability_checked", false);
        idx.stable = j.value("stable", false);
        idx.from_cache = true;
      }
    }
  }

  if (idx.class_of.empty()) {
    idx.class_of = compute_partition(*idx.universe, rules);

    idx.stability_checked = options.stability_check;
    if (options.stability_check) {
      // The bound-(L+1) universe extends the bound-L one, so the induced
      // partitions can be compared index-by-index over the shared prefix.
      const WordUniverse bigger = WordUniverse::build(X, Y, bound + 1, options.max_words);
      const std::vector<int> big = compute_partition(bigger, rules);
      const int n = static_cast<int>(idx.universe->words.size());
      std::unordered_map<int, int> small_to_big, big_to_small;
      bool stable = true;
      for (int i = 0; i < n && stable; ++i) {
        auto [it1, fresh1] = small_to_big.emplace(idx.class_of[i], big[i]);
        if (!fresh1 && it1->second != big[i]) stable = false;
        auto [it2, fresh2] = big_to_small.emplace(big[i], idx.class_of[i]);
        if (!fresh2 && it2->second != idx.class_of[i]) stable = false;
      }
      idx.stable = stable;
    }

    if (options.cache_dir) {
      std::error_code ec;
      std::filesystem::create_directories(*options.cache_dir, ec);
      nlohmann::json j;
      j["schema"] = kCacheSchemaVersion;
      j["key"] = key;
      j["class_of"] = idx.class_of;
      j["stability_checked"] = idx.stability_checked;
      j["stable"] = idx.stable;
      std::ofstream out(cache_file);
      if (out) out << j.dump();
      // Cache write failures are not fatal; the result is still returned.
    }
  }

  const int n = static_cast<int>(idx.universe->words.size());
  int class_count = 0;
  for (int c : idx.class_of) class_count = std::max(class_count, c + 1);
  idx.classes.assign(class_count, ClassInfo{});
  std::vector<bool> seen(class_count, false);
  for (int i = 0; i < n; ++i) {
    const int c = idx.class_of[i];
    ClassInfo& info = idx.classes[c];
    if (!seen[c]) {
      seen[c] = true;
      info.id = c;
      info.representative = i;  // first member in canonical order is minimal
      info.min_word_size = idx.universe->words[i].size();
    }
    info.members += 1;
    if (idx.universe->words[i].size() == 1) info.has_singleton = true;
  }
  return idx;
}

}  // namespace gtp

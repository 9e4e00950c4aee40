#include "gtp/cli.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "gtp/action.hpp"
#include "gtp/canon.hpp"
#include "gtp/engine.hpp"
#include "gtp/error.hpp"
#include "gtp/quotient.hpp"
#include "gtp/structlab.hpp"

namespace gtp::cli {

using nlohmann::json;

namespace {

constexpr int kReportSchemaVersion = 1;

[[noreturn]] void bad(const std::string& field, const std::string& message) {
  throw ConfigError("config field \"" + field + "\": " + message);
}

const json& require_field(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing");
  return *it;
}

int require_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = require_field(j, key, path);
  if (!v.is_number_integer()) bad(path + "." + key, "must be an integer");
  return v.get<int>();
}

Carrier parse_carrier(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "must be an object");
  const std::string kind = require_field(j, "kind", path).get<std::string>();
  try {
    if (kind == "chain") return make_chain(require_int(j, "size", path));
    if (kind == "modring") return make_modring(require_int(j, "modulus", path));
    if (kind == "plain") {
      if (j.contains("elements"))
        return make_plain(j["elements"].get<std::vector<std::string>>());
      return make_plain(require_int(j, "size", path));
    }
    if (kind == "lattice") {
      auto labels = require_field(j, "elements", path).get<std::vector<std::string>>();
      auto meet = require_field(j, "meet", path).get<std::vector<std::vector<int>>>();
      return make_lattice(std::move(labels), std::move(meet));
    }
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
  bad(path + ".kind", "unknown carrier kind \"" + kind + "\"");
}

BinaryOp parse_op_spec(const json& j, const Carrier& c, const std::string& path) {
  if (!j.is_object()) bad(path, "must be an object");
  try {
    if (j.contains("builtin")) {
      const std::string name = j["builtin"].get<std::string>();
      const auto which = builtin_op_by_name(name);
      if (!which) bad(path + ".builtin", "unknown builtin \"" + name + "\"");
      return builtin_op(*which, c);
    }
    if (j.contains("op_table"))
      return make_binary_op(c, j["op_table"].get<std::vector<std::vector<int>>>());
    if (j.contains("q_pairs")) {
      std::set<std::pair<int, int>> pairs;
      for (const auto& p : j["q_pairs"]) {
        if (!p.is_array() || p.size() != 2) bad(path + ".q_pairs", "entries must be pairs");
        pairs.insert({p[0].get<int>(), p[1].get<int>()});
      }
      return alpha_from_Q(QRelation::normalized(c, std::move(pairs)));
    }
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
  bad(path, "expected one of builtin / op_table / q_pairs");
}

RelationalRule parse_rule_spec(const json& j, const Carrier& c, const std::string& path) {
  if (!j.is_object()) bad(path, "must be an object");
  try {
    if (j.contains("midpoint")) return midpoint_relation(c);
    if (j.contains("tuples")) {
      const json& t = j["tuples"];
      return RelationalRule::make(
          c, require_int(t, "left_arity", path + ".tuples"),
          require_int(t, "right_arity", path + ".tuples"),
          require_field(t, "entries", path + ".tuples").get<std::vector<std::vector<int>>>());
    }
    return lift_binary_op(parse_op_spec(j, c, path));
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
}

RuleSystem parse_rules(const json& j, const Carrier& X, const Carrier& Y,
                       const std::string& path) {
  if (!j.is_object()) bad(path, "must be an object");
  const bool has_family = j.contains("family");
  const bool has_explicit = j.contains("x") || j.contains("y");
  if (has_family == has_explicit)
    bad(path, "give exactly one rule-system source: family, or explicit x/y rules");
  if (has_family) {
    const std::string name = j["family"].get<std::string>();
    const auto f = family_by_name(name);
    if (!f) bad(path + ".family", "unknown family \"" + name + "\"");
    try {
      return family_rules(*f, X, Y);
    } catch (const std::invalid_argument& e) {
      bad(path + ".family", e.what());
    }
  }
  if (!j.contains("x") || !j.contains("y"))
    bad(path, "explicit rules need both x and y rule lists");
  std::vector<RelationalRule> xr, yr;
  int i = 0;
  for (const auto& r : j["x"]) xr.push_back(parse_rule_spec(r, X, path + ".x[" + std::to_string(i++) + "]"));
  i = 0;
  for (const auto& r : j["y"]) yr.push_back(parse_rule_spec(r, Y, path + ".y[" + std::to_string(i++) + "]"));
  try {
    return RuleSystem::make(std::move(xr), std::move(yr));
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
}

PermAction parse_action(const json& j, const Carrier& c, const std::string& path,
                        std::size_t max_group) {
  if (!j.is_object()) bad(path, "must be an object");
  std::vector<Perm> gens;
  if (j.contains("generators"))
    for (const auto& g : j["generators"]) gens.push_back(g.get<Perm>());
  try {
    return PermAction::generate(c, std::move(gens), max_group);
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
}

struct Resolved {
  Carrier X, Y;
  int bound = 1;
  bool stability = true;
  std::size_t max_words = 2'000'000;
  std::size_t max_group = 20'000;
};

Resolved resolve_common(json& config) {
  Resolved r;
  const json& carriers = require_field(config, "carriers", "config");
  r.X = parse_carrier(require_field(carriers, "x", "config.carriers"), "config.carriers.x");
  r.Y = parse_carrier(require_field(carriers, "y", "config.carriers"), "config.carriers.y");
  if (!config.contains("bound")) config["bound"] = 1;
  r.bound = require_int(config, "bound", "config");
  if (r.bound < 1) bad("config.bound", "must be >= 1");
  if (!config.contains("stability")) config["stability"] = true;
  if (!config["stability"].is_boolean()) bad("config.stability", "must be a boolean");
  r.stability = config["stability"].get<bool>();
  if (config.contains("ceilings")) {
    const json& c = config["ceilings"];
    if (c.contains("max_words")) r.max_words = c["max_words"].get<std::size_t>();
    if (c.contains("max_group")) r.max_group = c["max_group"].get<std::size_t>();
  }
  return r;
}

SaturateOptions saturate_options(const Resolved& r, const Invocation& inv) {
  SaturateOptions o;
  o.stability_check = r.stability;
  o.max_words = r.max_words;
  o.cache_dir = inv.cache_dir;
  return o;
}

std::string qualifier(const ClassIndex& idx) {
  std::string q = "(at bound " + std::to_string(idx.bound);
  if (idx.stability_checked)
    q += idx.stable ? ", stable)" : ", unstable)";
  else
    q += ", stability unchecked)";
  return q;
}

json verdict_json(const EntanglementVerdict& v, const Word& w, const ClassIndex& idx) {
  json j;
  j["word"] = format_word(w, idx.X, idx.Y);
  j["class"] = v.class_id;
  j["status"] = to_string(v.status);
  j["bound"] = v.bound;
  j["stable"] = v.stable;
  j["qualifier"] = qualifier(idx);
  return j;
}

json census_json(const ClassIndex& idx) {
  const Census c = census(idx);
  json j;
  j["classes"] = c.classes;
  j["separable"] = c.separable;
  j["entangled"] = c.entangled;
  j["histogram"] = c.histogram;
  j["qualifier"] = qualifier(idx);
  json table = json::array();
  for (const ClassInfo& info : idx.classes) {
    json row;
    row["class"] = info.id;
    row["members"] = info.members;
    row["min_word_size"] = info.min_word_size;
    row["separable"] = info.has_singleton;
    row["representative"] =
        format_word(idx.universe->words[info.representative], idx.X, idx.Y);
    table.push_back(std::move(row));
  }
  j["class_table"] = std::move(table);
  return j;
}

Word config_word(const json& config, const Carrier& X, const Carrier& Y) {
  if (!config.contains("word")) bad("config.word", "missing (give a word to analyze)");
  return parse_word(config["word"].get<std::string>(), X, Y);
}

json run_audit(json& config, const Invocation& inv) {
  const json& audit = require_field(config, "audit", "config");
  const std::string check = require_field(audit, "check", "config.audit").get<std::string>();
  json results;
  results["check"] = check;

  auto plain_of = [&](const char* who) {
    const int n = require_int(audit, "n", "config.audit");
    if (n < 1) bad(std::string("config.audit.n"), std::string("must be >= 1 for ") + who);
    return make_plain(n);
  };

  if (check == "count") {
    const OpCountReport r = enumerate_ops_audit(plain_of("count"));
    results["n"] = r.n;
    results["total_ops"] = r.total_ops;
    results["identity_psi_ops"] = r.identity_psi_ops;
    results["expected_total"] = r.expected_total;
    results["expected_identity"] = r.expected_identity;
    results["matches"] = r.matches;
    return results;
  }
  if (check == "selector") {
    const SelectorEquivalenceReport r = selector_equivalence_audit(plain_of("selector"));
    results["n"] = r.n;
    results["ops_checked"] = r.ops_checked;
    results["counterexamples"] = r.counterexamples;
    results["samples"] = r.samples;
    return results;
  }
  if (check == "assoc") {
    const AssocAuditReport r = associativity_audit(plain_of("assoc"));
    results["n"] = r.n;
    results["relations_checked"] = r.rows.size();
    results["disagreements"] = r.disagreements;
    json rows = json::array();
    for (const AssocRow& row : r.rows) {
      json jr;
      jr["q_mask"] = row.q_mask;
      jr["def_associative"] = row.def_associative;
      jr["criterion"] = row.criterion;
      rows.push_back(std::move(jr));
    }
    results["rows"] = std::move(rows);
    return results;
  }
  if (check == "comm") {
    const CommAuditReport r = commutativity_audit(plain_of("comm"));
    results["n"] = r.n;
    results["relations_checked"] = r.rows.size();
    results["discrepancies"] = r.discrepancies;
    results["discrepancy_count"] = r.discrepancies.size();
    json rows = json::array();
    for (const CommRow& row : r.rows) {
      json jr;
      jr["q_mask"] = row.q_mask;
      jr["def_commutative"] = row.def_commutative;
      jr["criterion_q_is_diagonal"] = row.criterion_q_is_diagonal;
      rows.push_back(std::move(jr));
    }
    results["rows"] = std::move(rows);
    return results;
  }
  if (check == "union-dist") {
    const json& carriers = require_field(config, "carriers", "config");
    const Carrier X =
        parse_carrier(require_field(carriers, "x", "config.carriers"), "config.carriers.x");
    const BinaryOp op =
        parse_op_spec(require_field(audit, "op", "config.audit"), X, "config.audit.op");
    const KuratowskiSearchReport r = kuratowski_union_search(op);
    results["violation_found"] = r.violation_found;
    if (r.violation_found) {
      results["a_mask"] = r.a;
      results["b_mask"] = r.b;
    }
    return results;
  }
  if (check == "canon") {
    Resolved r = resolve_common(config);
    const json& rules = require_field(config, "rules", "config");
    if (!rules.contains("family"))
      bad("config.rules.family", "the canon audit needs a rule family");
    const auto f = family_by_name(rules["family"].get<std::string>());
    if (!f) bad("config.rules.family", "unknown family");
    const CanonAuditReport a =
        canon_oracle_audit(*f, r.X, r.Y, r.bound, saturate_options(r, inv));
    results["family"] = to_string(a.family);
    results["bound"] = a.bound;
    results["stable"] = a.stable;
    results["words_checked"] = a.words_checked;
    results["sound"] = a.sound;
    results["unsound"] = a.unsound;
    results["free_outputs"] = a.free_outputs;
    results["idempotent"] = a.idempotent;
    results["classes_with_multiple_free_members"] = a.classes_with_multiple_free_members;
    results["verdict_agree"] = a.verdict_agree;
    results["verdict_disagree"] = a.verdict_disagree;
    results["separable_with_large_canonical"] = a.separable_with_large_canonical;
    // A nonzero count means free forms of size >= 2 can still be separable:
    // the size criterion over-predicts entanglement for this family.
    results["size_criterion_overpredicts"] = a.separable_with_large_canonical > 0;
    return results;
  }
  bad("config.audit.check", "unknown check \"" + check + "\"");
}

json run_action_check(json& config, const Invocation& inv) {
  Resolved r = resolve_common(config);
  const RuleSystem rules =
      parse_rules(require_field(config, "rules", "config"), r.X, r.Y, "config.rules");

  PermAction gx = trivial_action(r.X);
  PermAction hy = trivial_action(r.Y);
  if (config.contains("actions")) {
    const json& actions = config["actions"];
    if (actions.contains("x"))
      gx = parse_action(actions["x"], r.X, "config.actions.x", r.max_group);
    if (actions.contains("y"))
      hy = parse_action(actions["y"], r.Y, "config.actions.y", r.max_group);
  }

  json results;
  results["group_order_x"] = gx.order();
  results["group_order_y"] = hy.order();

  json compat = json::array();
  bool all_ok = true;
  auto check_side = [&](const std::vector<RelationalRule>& side_rules,
                        const PermAction& action, const char* side) {
    for (std::size_t i = 0; i < side_rules.size(); ++i) {
      const CompatReport cr = compatibility_check(action, side_rules[i]);
      json row;
      row["side"] = side;
      row["rule"] = i;
      row["ok"] = cr.ok;
      if (!cr.ok) row["counterexample"] = cr.counterexample;
      all_ok = all_ok && cr.ok;
      compat.push_back(std::move(row));
    }
  };
  check_side(rules.x_rules, gx, "x");
  check_side(rules.y_rules, hy, "y");
  results["compatible"] = all_ok;
  results["compatibility"] = std::move(compat);

  if (!all_ok) {
    results["refused"] =
        "audits require compatible actions; incompatible rules listed above";
    return results;
  }

  const ClassIndex idx = saturate(r.X, r.Y, rules, r.bound, saturate_options(r, inv));
  results["qualifier"] = qualifier(idx);
  json wd = json::array();
  for (const auto& v : well_defined_audit(gx, hy, rules, idx)) wd.push_back(v.description);
  results["well_defined_violations"] = std::move(wd);
  json inv_list = json::array();
  for (const auto& v : invariance_audit(gx, hy, idx)) inv_list.push_back(v.description);
  results["invariance_violations"] = std::move(inv_list);
  return results;
}

json dispatch(json& config, const Invocation& inv, json& timing) {
  const std::string& cmd = inv.command;

  if (cmd == "audit") return run_audit(config, inv);
  if (cmd == "action-check") return run_action_check(config, inv);

  if (cmd == "canon") {
    Resolved r = resolve_common(config);
    const json& rules = require_field(config, "rules", "config");
    if (!rules.contains("family"))
      bad("config.rules.family", "the canon command needs a rule family");
    const auto f = family_by_name(rules["family"].get<std::string>());
    if (!f) bad("config.rules.family", "unknown family");
    const Word w = config_word(config, r.X, r.Y);
    const Word c = canonicalize(w, *f, r.X, r.Y);
    json results;
    results["family"] = to_string(*f);
    results["input"] = format_word(w, r.X, r.Y);
    results["input_free"] = freeness(w, *f, r.X, r.Y);
    results["canonical"] = format_word(c, r.X, r.Y);
    results["canonical_free"] = freeness(c, *f, r.X, r.Y);
    return results;
  }

  if (cmd == "saturate" || cmd == "census" || cmd == "entangled" || cmd == "refine") {
    Resolved r = resolve_common(config);
    const RuleSystem rules =
        parse_rules(require_field(config, "rules", "config"), r.X, r.Y, "config.rules");
    const ClassIndex idx = saturate(r.X, r.Y, rules, r.bound, saturate_options(r, inv));
    timing["cache"] = inv.cache_dir ? (idx.from_cache ? "hit" : "miss") : "off";

    if (cmd == "saturate") {
      json results;
      results["words"] = idx.universe->words.size();
      results["classes"] = idx.class_count();
      results["bound"] = idx.bound;
      results["stability_checked"] = idx.stability_checked;
      results["stable"] = idx.stable;
      results["qualifier"] = qualifier(idx);
      return results;
    }
    if (cmd == "census") return census_json(idx);
    if (cmd == "entangled") {
      const Word w = config_word(config, r.X, r.Y);
      try {
        return verdict_json(is_entangled(w, idx), w, idx);
      } catch (const std::out_of_range& e) {
        bad("config.word", e.what());
      }
    }
    // refine
    const RuleSystem big = parse_rules(require_field(config, "rules_big", "config"), r.X,
                                       r.Y, "config.rules_big");
    const ClassIndex idx_big = saturate(r.X, r.Y, big, r.bound, saturate_options(r, inv));
    try {
      const RefinementReport rr = refinement_check(idx, idx_big);
      json results;
      results["ok"] = rr.ok;
      if (rr.counterexample) {
        results["counterexample"] = {format_word(rr.counterexample->first, r.X, r.Y),
                                     format_word(rr.counterexample->second, r.X, r.Y)};
      }
      results["classes_small"] = idx.class_count();
      results["classes_big"] = idx_big.class_count();
      results["qualifier"] = qualifier(idx);
      return results;
    } catch (const std::invalid_argument& e) {
      bad("config.rules_big", e.what());
    }
  }

  bad("command", "unknown command \"" + cmd + "\"");
}

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

json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config file " + path.string() + " is not valid JSON");
  if (!j.is_object()) throw ConfigError("config file must contain a JSON object");
  return j;
}

json run_command(const Invocation& inv) {
  const auto start = std::chrono::steady_clock::now();
  json config = inv.config;
  json timing = json::object();

  json results = dispatch(config, inv, timing);

  const auto elapsed = std::chrono::steady_clock::now() - start;
  timing["ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = inv.command;
  report["config"] = config;
  report["config_hash"] = fnv1a_hex(inv.command + "\n" + config.dump());
  report["results"] = std::move(results);
  report["timing"] = std::move(timing);
  return report;
}

namespace {

void flatten_csv(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_csv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) flatten_csv(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void rows_csv(const json& rows, std::ostream& out) {
  if (rows.empty()) return;
  bool first = true;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    out << (first ? "" : ",") << it.key();
    first = false;
  }
  out << "\n";
  for (const auto& row : rows) {
    first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      const json& v = it.value();
      out << (first ? "" : ",") << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    out << "\n";
  }
}

}  // namespace

std::string render(const nlohmann::json& report, const std::string& format) {
  if (format == "report") return report.dump(2) + "\n";
  if (format == "csv") {
    std::ostringstream out;
    const json& results = report.at("results");
    if (results.contains("rows"))
      rows_csv(results["rows"], out);
    else if (results.contains("class_table"))
      rows_csv(results["class_table"], out);
    else
      flatten_csv(results, "", out);
    return out.str();
  }
  throw ConfigError("unknown output format \"" + format + "\" (use report or csv)");
}

}  // namespace gtp::cli

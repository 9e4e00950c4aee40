#include "gtp/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gtp {

BinaryOp make_binary_op(Carrier carrier, std::vector<std::vector<int>> table) {
  const int n = carrier.size();
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("operation table must be total");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("operation table must be total");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("operation table entry outside the carrier");
  }
  return BinaryOp{std::move(carrier), std::move(table)};
}

std::optional<BuiltinOp> builtin_op_by_name(const std::string& name) {
  if (name == "lambda") return BuiltinOp::Lambda;
  if (name == "rho") return BuiltinOp::Rho;
  if (name == "min") return BuiltinOp::Min;
  if (name == "max") return BuiltinOp::Max;
  return std::nullopt;
}

BinaryOp builtin_op(BuiltinOp which, const Carrier& c) {
  const int n = c.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
  switch (which) {
    case BuiltinOp::Lambda:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = a;
      break;
    case BuiltinOp::Rho:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = b;
      break;
    case BuiltinOp::Min:
      if (!c.has_meet())
        throw std::invalid_argument(
            "min requires a chain or lattice carrier (no meet structure)");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = c.meet_of(a, b);
      break;
    case BuiltinOp::Max:
      if (c.kind != CarrierKind::Chain)
        throw std::invalid_argument(
            "max requires a totally ordered carrier (no join structure)");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = c.leq(a, b) ? b : a;
      break;
  }
  return BinaryOp{c, std::move(table)};
}

QRelation QRelation::normalized(Carrier carrier, std::set<std::pair<int, int>> raw) {
  const int n = carrier.size();
  QRelation q;
  q.carrier = std::move(carrier);
  for (const auto& [a, b] : raw) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("relation pair outside the carrier");
    if (a != b) q.pairs.insert({a, b});
  }
  return q;
}

BinaryOp alpha_from_Q(const QRelation& q) {
  const int n = q.carrier.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool in_q = a == b || q.pairs.count({a, b}) > 0;
      table[a][b] = in_q ? a : b;
    }
  return BinaryOp{q.carrier, std::move(table)};
}

QRelation extract_q(const BinaryOp& op) {
  const int n = op.carrier.size();
  std::set<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int r = op.apply(a, b);
      if (r != a && r != b)
        throw std::invalid_argument("operation is not a selector: output (" +
                                    op.carrier.labels[a] + "," + op.carrier.labels[b] +
                                    ") -> " + op.carrier.labels[r]);
      if (a != b && r == a) pairs.insert({a, b});
    }
  return QRelation::normalized(op.carrier, std::move(pairs));
}

RelationalRule RelationalRule::make(Carrier carrier, int left_arity, int right_arity,
                                    std::vector<std::vector<int>> tuples,
                                    std::optional<BinaryOp> lifted_from) {
  if (left_arity < 1 || right_arity < 1)
    throw std::invalid_argument("rule arities must be >= 1");
  const int n = carrier.size();
  const std::size_t len = static_cast<std::size_t>(left_arity + right_arity);
  for (const auto& t : tuples) {
    if (t.size() != len)
      throw std::invalid_argument("rule tuple has wrong length");
    for (int v : t)
      if (v < 0 || v >= n)
        throw std::invalid_argument("rule tuple entry outside the carrier");
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

  RelationalRule r;
  r.carrier = std::move(carrier);
  r.left_arity = left_arity;
  r.right_arity = right_arity;
  r.tuples = std::move(tuples);
  r.lifted_from = std::move(lifted_from);
  for (const auto& t : r.tuples) {
    std::vector<int> left(t.begin(), t.begin() + left_arity);
    std::vector<int> right(t.begin() + left_arity, t.end());
    r.by_left[left].push_back(right);
    r.by_right[right].push_back(left);
  }
  return r;
}

bool RelationalRule::contains(const std::vector<int>& tuple) const {
  return std::binary_search(tuples.begin(), tuples.end(), tuple);
}

RelationalRule lift_binary_op(const BinaryOp& op) {
  const int n = op.carrier.size();
  std::vector<std::vector<int>> tuples;
  tuples.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tuples.push_back({op.apply(a, b), a, b});
  return RelationalRule::make(op.carrier, 1, 2, std::move(tuples), op);
}

RelationalRule midpoint_relation(const Carrier& c) {
  if (c.kind != CarrierKind::ModRing)
    throw std::invalid_argument("midpoint relation requires a modular-ring carrier");
  const int p = c.modulus;
  if (p % 2 == 0)
    throw std::invalid_argument(
        "midpoint relation requires an odd modulus (2 is not invertible mod " +
        std::to_string(p) + ")");
  std::vector<std::vector<int>> tuples;
  tuples.reserve(static_cast<std::size_t>(p) * p);
  const int inv2 = (p + 1) / 2;  // 2 * inv2 == 1 (mod p) for odd p
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) tuples.push_back({(a + b) % p * inv2 % p, a, b});
  return RelationalRule::make(c, 1, 2, std::move(tuples));
}

RuleSystem RuleSystem::make(std::vector<RelationalRule> x_rules,
                            std::vector<RelationalRule> y_rules) {
  if (x_rules.empty() || y_rules.empty())
    throw std::invalid_argument("a rule system needs at least one rule per side");
  for (const auto& r : x_rules)
    if (!(r.carrier == x_rules.front().carrier))
      throw std::invalid_argument("all X rules must share one carrier");
  for (const auto& r : y_rules)
    if (!(r.carrier == y_rules.front().carrier))
      throw std::invalid_argument("all Y rules must share one carrier");
  RuleSystem rs;
  rs.X = x_rules.front().carrier;
  rs.Y = y_rules.front().carrier;
  rs.x_rules = std::move(x_rules);
  rs.y_rules = std::move(y_rules);
  return rs;
}

namespace {

bool side_subset(const std::vector<RelationalRule>& small,
                 const std::vector<RelationalRule>& big) {
  for (const auto& r : small)
    for (const auto& t : r.tuples) {
      bool covered = false;
      for (const auto& b : big)
        if (b.same_shape_as(r) && b.contains(t)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  return true;
}

}  // namespace

bool rules_subset(const RuleSystem& small, const RuleSystem& big) {
  if (!(small.X == big.X) || !(small.Y == big.Y)) return false;
  return side_subset(small.x_rules, big.x_rules) &&
         side_subset(small.y_rules, big.y_rules);
}

CompatReport compatibility_check(const PermAction& action, const RelationalRule& rule) {
  if (!(action.carrier == rule.carrier))
    throw std::invalid_argument("action and rule act on different carriers");

  const auto& labels = rule.carrier.labels;
  if (rule.lifted_from) {
    const BinaryOp& op = *rule.lifted_from;
    const int n = rule.carrier.size();
    for (const Perm& g : action.elements)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const int lhs = op.apply(g[a], g[b]);
          const int rhs = g[op.apply(a, b)];
          if (lhs != rhs) {
            std::ostringstream msg;
            msg << "op(g " << labels[a] << ", g " << labels[b] << ") = " << labels[lhs]
                << " but g op(" << labels[a] << "," << labels[b] << ") = " << labels[rhs];
            return {false, msg.str()};
          }
        }
    return {true, ""};
  }

  for (const Perm& g : action.elements)
    for (const auto& t : rule.tuples) {
      std::vector<int> image(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = g[t[i]];
      if (!rule.contains(image)) {
        std::ostringstream msg;
        msg << "tuple (";
        for (std::size_t i = 0; i < t.size(); ++i)
          msg << (i ? "," : "") << labels[t[i]];
        msg << ") maps outside the relation";
        return {false, msg.str()};
      }
    }
  return {true, ""};
}

}  // namespace gtp

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gtp/carrier.hpp"
#include "gtp/perm.hpp"

namespace gtp {

// A total binary operation on a carrier, given by its table.
struct BinaryOp {
  Carrier carrier;
  std::vector<std::vector<int>> table;

  int apply(int a, int b) const { return table[a][b]; }
  bool operator==(const BinaryOp&) const = default;
};

BinaryOp make_binary_op(Carrier carrier, std::vector<std::vector<int>> table);

enum class BuiltinOp { Lambda, Rho, Min, Max };

std::optional<BuiltinOp> builtin_op_by_name(const std::string& name);

// lambda picks the first argument, rho the second; min/max follow the
// carrier's meet table / total order.
BinaryOp builtin_op(BuiltinOp which, const Carrier& c);

// A binary relation on a carrier, kept diagonal-free: only the off-diagonal
// part distinguishes the induced selector operations.
struct QRelation {
  Carrier carrier;
  std::set<std::pair<int, int>> pairs;  // (a, b) with a != b

  static QRelation normalized(Carrier carrier, std::set<std::pair<int, int>> raw);
  bool operator==(const QRelation&) const = default;
};

// The selector operation: first argument on pairs in Q (diagonal re-added),
// second argument otherwise.
BinaryOp alpha_from_Q(const QRelation& q);

// Inverse of alpha_from_Q on selector operations (ops whose output is always
// one of the arguments). Precondition: op is a selector.
QRelation extract_q(const BinaryOp& op);

// A rewrite-rule generator: a relation between left tuples (arity n) and
// right tuples (arity m) of carrier elements. Applied symmetrically by the
// engine: n same-fiber pairs may be replaced by m, and vice-versa.
struct RelationalRule {
  Carrier carrier;
  int left_arity = 1;
  int right_arity = 1;
  std::vector<std::vector<int>> tuples;  // sorted, unique, each of length n+m
  // Set when the rule was lifted from a binary operation; lets compatibility
  // checks run in operation form with pointwise counterexamples.
  std::optional<BinaryOp> lifted_from;

  // left tuple -> right tuples, and the reverse; built on construction.
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_left;
  std::map<std::vector<int>, std::vector<std::vector<int>>> by_right;

  static RelationalRule make(Carrier carrier, int left_arity, int right_arity,
                             std::vector<std::vector<int>> tuples,
                             std::optional<BinaryOp> lifted_from = std::nullopt);

  bool contains(const std::vector<int>& tuple) const;
  bool same_shape_as(const RelationalRule& other) const {
    return left_arity == other.left_arity && right_arity == other.right_arity;
  }
};

// op as the (1,2)-relation {(op(a,b), a, b)}; the engine's symmetric
// application of it is exactly the contraction/expansion pair for op.
RelationalRule lift_binary_op(const BinaryOp& op);

// {(x, x', x'') : 2x = x' + x'' (mod p)} on a modular-ring carrier with odd
// modulus (2 must be invertible so the midpoint is total and unique).
RelationalRule midpoint_relation(const Carrier& c);

// Rule families over the two factors. All x_rules share carrier X and all
// y_rules share carrier Y; both sides are nonempty.
struct RuleSystem {
  Carrier X;
  Carrier Y;
  std::vector<RelationalRule> x_rules;
  std::vector<RelationalRule> y_rules;

  static RuleSystem make(std::vector<RelationalRule> x_rules,
                         std::vector<RelationalRule> y_rules);
};

// True when every rule of `small` is covered, tuple-wise, by the same-shape
// rules of `big` on the same carrier (so every small rewrite is a big one).
bool rules_subset(const RuleSystem& small, const RuleSystem& big);

struct CompatReport {
  bool ok = true;
  std::string counterexample;  // empty when ok
};

// Equivariance of the rule under the action. For lifted binary operations
// this is op(g a, g b) == g op(a, b) for all g, a, b; for general relations
// it is componentwise preservation of the tuple set (which coincides with
// the former on lifted rules).
CompatReport compatibility_check(const PermAction& action, const RelationalRule& rule);

}  // namespace gtp

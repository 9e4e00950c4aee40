#include "gtp/structlab.hpp"

#include <sstream>
#include <stdexcept>

#include "gtp/error.hpp"

namespace gtp {

namespace {

constexpr int kMaxGeneratorCarrier = 4;  // 16-entry subset tables
constexpr int kMaxEnumerationCarrier = 3;  // n^(n^2) operation tables

// Closure over a flat table; the hot path of the enumeration audits.
Subset closure_flat(Subset a, const int* table, int n) {
  Subset cur = a;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < n; ++i) {
      if (!(cur & (1u << i))) continue;
      for (int j = 0; j < n; ++j) {
        if (!(cur & (1u << j))) continue;
        const Subset bit = 1u << table[i * n + j];
        if (!(cur & bit)) {
          cur |= bit;
          grew = true;
        }
      }
    }
  }
  return cur;
}

std::vector<int> flatten(const BinaryOp& op) {
  const int n = op.carrier.size();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[a * n + b] = op.table[a][b];
  return flat;
}

std::string subset_str(Subset a, const Carrier& c) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < c.size(); ++i)
    if (a & (1u << i)) {
      if (!first) s += ",";
      first = false;
      s += c.labels[i];
    }
  return s + "}";
}

void require_generator_size(const Carrier& c) {
  if (c.size() > kMaxGeneratorCarrier)
    throw ResourceLimitError("subset tables are capped at " +
                             std::to_string(kMaxGeneratorCarrier) + " elements");
}

void require_enumeration_size(const Carrier& c) {
  if (c.size() > kMaxEnumerationCarrier)
    throw ResourceLimitError("operation enumeration is capped at " +
                             std::to_string(kMaxEnumerationCarrier) + " elements");
}

// Exhaustive search: is the op equal to the selector of some relation mask?
// Kept as a search (rather than reconstructing the unique candidate) so the
// three properties of the audit are computed by genuinely separate routes.
bool exists_q_selector(const std::vector<int>& flat, int n) {
  const std::uint32_t limit = 1u << (n * n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool match = true;
    for (int a = 0; a < n && match; ++a)
      for (int b = 0; b < n; ++b) {
        const int r = (mask >> (a * n + b)) & 1u ? a : b;
        if (flat[a * n + b] != r) {
          match = false;
          break;
        }
      }
    if (match) return true;
  }
  return false;
}

bool psi_is_identity(const std::vector<int>& flat, int n) {
  const Subset full = (1u << n) - 1;
  for (Subset a = 0; a <= full; ++a)
    if (closure_flat(a, flat.data(), n) != a) return false;
  return true;
}

// Selector table for a diagonal-augmented relation mask.
std::vector<int> alpha_table_from_mask(std::uint32_t aug_mask, int n) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[a * n + b] = (aug_mask >> (a * n + b)) & 1u ? a : b;
  return flat;
}

std::uint32_t diagonal_mask(int n) {
  std::uint32_t m = 0;
  for (int a = 0; a < n; ++a) m |= 1u << (a * n + a);
  return m;
}

bool table_associative(const std::vector<int>& flat, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]]) return false;
  return true;
}

bool table_commutative(const std::vector<int>& flat, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (flat[a * n + b] != flat[b * n + a]) return false;
  return true;
}

}  // namespace

Subset closure(Subset a, const BinaryOp& op) {
  const std::vector<int> flat = flatten(op);
  return closure_flat(a, flat.data(), op.carrier.size());
}

GeneratorTable identity_generator(const Carrier& c) {
  require_generator_size(c);
  GeneratorTable t;
  t.carrier = c;
  const Subset full = (1u << c.size()) - 1;
  t.map.resize(full + 1);
  for (Subset a = 0; a <= full; ++a) t.map[a] = a;
  return t;
}

GeneratorTable psi_alpha(const BinaryOp& op) {
  require_generator_size(op.carrier);
  const std::vector<int> flat = flatten(op);
  const int n = op.carrier.size();
  GeneratorTable t;
  t.carrier = op.carrier;
  const Subset full = (1u << n) - 1;
  t.map.resize(full + 1);
  for (Subset a = 0; a <= full; ++a) t.map[a] = closure_flat(a, flat.data(), n);
  return t;
}

GeneratorReport is_generator(const GeneratorTable& t) {
  GeneratorReport report;
  const Subset full = (1u << t.carrier.size()) - 1;
  for (Subset a = 0; a <= full; ++a)
    if ((t.map[a] & a) != a) {
      report.ok = false;
      report.violations.push_back("not extensive at " + subset_str(a, t.carrier) +
                                  " -> " + subset_str(t.map[a], t.carrier));
    }
  for (Subset big = 0; big <= full; ++big)
    for (Subset sub = big;; sub = (sub - 1) & big) {
      if ((t.map[sub] & ~t.map[big]) != 0) {
        report.ok = false;
        report.violations.push_back("not monotone: " + subset_str(sub, t.carrier) +
                                    " within " + subset_str(big, t.carrier) + " but " +
                                    subset_str(t.map[sub], t.carrier) + " exceeds " +
                                    subset_str(t.map[big], t.carrier));
      }
      if (sub == 0) break;
    }
  return report;
}

bool is_compatible(const BinaryOp& op, const GeneratorTable& t) {
  const GeneratorTable psi = psi_alpha(op);
  const Subset full = (1u << op.carrier.size()) - 1;
  for (Subset a = 0; a <= full; ++a)
    if ((psi.map[a] & ~t.map[a]) != 0) return false;
  return true;
}

bool compatible_via_stability(const BinaryOp& op, const GeneratorTable& t) {
  const int n = op.carrier.size();
  const Subset full = (1u << n) - 1;
  for (Subset a = 0; a <= full; ++a) {
    const Subset image = t.map[a];
    for (int i = 0; i < n; ++i) {
      if (!(image & (1u << i))) continue;
      for (int j = 0; j < n; ++j) {
        if (!(image & (1u << j))) continue;
        if (!(image & (1u << op.apply(i, j)))) return false;
      }
    }
  }
  return true;
}

bool compatible_via_closure(const BinaryOp& op, const GeneratorTable& t) {
  const std::vector<int> flat = flatten(op);
  const int n = op.carrier.size();
  const Subset full = (1u << n) - 1;
  for (Subset a = 0; a <= full; ++a)
    if ((closure_flat(a, flat.data(), n) & ~t.map[a]) != 0) return false;
  return true;
}

OpCountReport enumerate_ops_audit(const Carrier& c) {
  require_enumeration_size(c);
  const int n = c.size();
  const int cells = n * n;

  OpCountReport report;
  report.n = n;
  report.expected_total = 1;
  for (int i = 0; i < cells; ++i) report.expected_total *= n;
  report.expected_identity = 1ull << (cells - n);

  std::vector<int> flat(cells, 0);
  while (true) {
    report.total_ops += 1;
    if (psi_is_identity(flat, n)) report.identity_psi_ops += 1;
    int i = cells - 1;
    while (i >= 0 && flat[i] == n - 1) flat[i--] = 0;
    if (i < 0) break;
    flat[i] += 1;
  }

  report.matches = report.total_ops == report.expected_total &&
                   report.identity_psi_ops == report.expected_identity;
  return report;
}

SelectorEquivalenceReport selector_equivalence_audit(const Carrier& c) {
  require_enumeration_size(c);
  const int n = c.size();
  const int cells = n * n;

  SelectorEquivalenceReport report;
  report.n = n;

  std::vector<int> flat(cells, 0);
  while (true) {
    report.ops_checked += 1;
    const bool p_identity = psi_is_identity(flat, n);
    bool p_arguments = true;
    for (int a = 0; a < n && p_arguments; ++a)
      for (int b = 0; b < n; ++b) {
        const int r = flat[a * n + b];
        if (r != a && r != b) {
          p_arguments = false;
          break;
        }
      }
    const bool p_selector = exists_q_selector(flat, n);
    if (p_identity != p_arguments || p_arguments != p_selector) {
      report.counterexamples += 1;
      if (report.samples.size() < 8) report.samples.push_back(flat);
    }
    int i = cells - 1;
    while (i >= 0 && flat[i] == n - 1) flat[i--] = 0;
    if (i < 0) break;
    flat[i] += 1;
  }
  return report;
}

AssocAuditReport associativity_audit(const Carrier& c) {
  require_enumeration_size(c);
  const int n = c.size();
  const std::uint32_t diag = diagonal_mask(n);
  const std::uint32_t limit = 1u << (n * n);

  AssocAuditReport report;
  report.n = n;
  report.rows.reserve(limit);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const std::uint32_t aug = mask | diag;
    AssocRow row;
    row.q_mask = mask;
    row.def_associative = table_associative(alpha_table_from_mask(aug, n), n);
    row.criterion = true;
    for (int a = 0; a < n && row.criterion; ++a)
      for (int b = 0; b < n && row.criterion; ++b) {
        if (!((aug >> (a * n + b)) & 1u)) continue;
        for (int d = 0; d < n; ++d) {
          if (!((aug >> (b * n + d)) & 1u)) continue;
          if (!((aug >> (a * n + d)) & 1u)) {
            row.criterion = false;
            break;
          }
        }
      }
    if (row.def_associative != row.criterion) report.disagreements += 1;
    report.rows.push_back(row);
  }
  return report;
}

CommAuditReport commutativity_audit(const Carrier& c) {
  require_enumeration_size(c);
  const int n = c.size();
  const std::uint32_t diag = diagonal_mask(n);
  const std::uint32_t limit = 1u << (n * n);

  CommAuditReport report;
  report.n = n;
  report.rows.reserve(limit);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const std::uint32_t aug = mask | diag;
    CommRow row;
    row.q_mask = mask;
    row.def_commutative = table_commutative(alpha_table_from_mask(aug, n), n);
    row.criterion_q_is_diagonal = (aug == diag);
    if (row.def_commutative != row.criterion_q_is_diagonal)
      report.discrepancies.push_back(mask);
    report.rows.push_back(row);
  }
  return report;
}

bool kuratowski_union_check(const BinaryOp& op, Subset a, Subset b) {
  const std::vector<int> flat = flatten(op);
  const int n = op.carrier.size();
  return closure_flat(a | b, flat.data(), n) ==
         (closure_flat(a, flat.data(), n) | closure_flat(b, flat.data(), n));
}

KuratowskiSearchReport kuratowski_union_search(const BinaryOp& op) {
  const int n = op.carrier.size();
  if (n > 12)
    throw ResourceLimitError("union-distributivity search scans 4^n subset pairs; "
                             "carriers are capped at 12 elements");
  const std::vector<int> flat = flatten(op);
  const Subset full = (1u << n) - 1;
  std::vector<Subset> cl(full + 1);
  for (Subset a = 0; a <= full; ++a) cl[a] = closure_flat(a, flat.data(), n);
  for (Subset a = 0; a <= full; ++a)
    for (Subset b = 0; b <= full; ++b)
      if (cl[a | b] != (cl[a] | cl[b])) return {true, a, b};
  return {false, 0, 0};
}

}  // namespace gtp

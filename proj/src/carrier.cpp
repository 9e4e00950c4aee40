#include "gtp/carrier.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace gtp {

const char* to_string(CarrierKind k) {
  switch (k) {
    case CarrierKind::Plain: return "plain";
    case CarrierKind::Chain: return "chain";
    case CarrierKind::Lattice: return "lattice";
    case CarrierKind::ModRing: return "modring";
  }
  return "?";
}

int Carrier::index_of_label(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

namespace {

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void require_distinct(const std::vector<std::string>& labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("carrier labels must be pairwise distinct");
}

}  // namespace

Carrier make_plain(std::vector<std::string> labels) {
  if (labels.empty())
    throw std::invalid_argument("carrier must have at least one element");
  require_distinct(labels);
  Carrier c;
  c.kind = CarrierKind::Plain;
  c.labels = std::move(labels);
  return c;
}

Carrier make_plain(int n) {
  if (n < 1) throw std::invalid_argument("carrier size must be >= 1");
  return make_plain(numeric_labels(n));
}

Carrier make_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain size must be >= 1");
  Carrier c;
  c.kind = CarrierKind::Chain;
  c.labels = numeric_labels(n);
  c.order.assign(n, std::vector<bool>(n, false));
  c.meet.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      c.order[a][b] = a <= b;
      c.meet[a][b] = std::min(a, b);
    }
  return c;
}

Carrier make_lattice(std::vector<std::string> labels,
                     std::vector<std::vector<int>> meet_table) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw std::invalid_argument("lattice must have at least one element");
  require_distinct(labels);
  if (static_cast<int>(meet_table.size()) != n)
    throw std::invalid_argument("meet table must be total (square over the elements)");
  for (const auto& row : meet_table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("meet table must be total (square over the elements)");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("meet table entry outside the carrier");
  }

  auto fail = [&](const std::string& axiom, const std::string& where) {
    throw std::invalid_argument("meet table violates " + axiom + " at " + where);
  };
  for (int a = 0; a < n; ++a)
    if (meet_table[a][a] != a)
      fail("idempotence", "(" + labels[a] + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (meet_table[a][b] != meet_table[b][a])
        fail("commutativity", "(" + labels[a] + "," + labels[b] + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        if (meet_table[meet_table[a][b]][cc] != meet_table[a][meet_table[b][cc]])
          fail("associativity",
               "(" + labels[a] + "," + labels[b] + "," + labels[cc] + ")");

  Carrier c;
  c.kind = CarrierKind::Lattice;
  c.labels = std::move(labels);
  c.meet = std::move(meet_table);
  // a <= b iff a /\ b = a.
  c.order.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.order[a][b] = c.meet[a][b] == a;
  return c;
}

Carrier make_modring(int p) {
  if (p < 1) throw std::invalid_argument("modulus must be >= 1");
  Carrier c;
  c.kind = CarrierKind::ModRing;
  c.labels = numeric_labels(p);
  c.modulus = p;
  return c;
}

ValidationReport validate_carrier(const Carrier& c) {
  ValidationReport report;
  auto note = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const int n = c.size();

  if (n == 0) {
    note("carrier is empty");
    return report;
  }
  {
    std::set<std::string> seen(c.labels.begin(), c.labels.end());
    if (static_cast<int>(seen.size()) != n) note("labels are not pairwise distinct");
  }

  auto check_square = [&](auto& table, const char* name) {
    if (static_cast<int>(table.size()) != n) {
      note(std::string(name) + " table is not total");
      return false;
    }
    for (const auto& row : table)
      if (static_cast<int>(row.size()) != n) {
        note(std::string(name) + " table is not total");
        return false;
      }
    return true;
  };

  if (c.kind == CarrierKind::Chain || c.kind == CarrierKind::Lattice) {
    if (c.order.empty()) {
      note("order table missing");
    } else if (check_square(c.order, "order")) {
      for (int a = 0; a < n; ++a)
        if (!c.order[a][a])
          note("order not reflexive at (" + c.labels[a] + ")");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b && c.order[a][b] && c.order[b][a])
            note("order not antisymmetric at (" + c.labels[a] + "," + c.labels[b] + ")");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int d = 0; d < n; ++d)
            if (c.order[a][b] && c.order[b][d] && !c.order[a][d])
              note("order not transitive at (" + c.labels[a] + "," + c.labels[b] +
                   "," + c.labels[d] + ")");
    }
    if (c.kind == CarrierKind::Chain && !c.order.empty())
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!c.order[a][b] && !c.order[b][a])
            note("order not total at (" + c.labels[a] + "," + c.labels[b] + ")");
  }

  if (c.kind == CarrierKind::Lattice || c.kind == CarrierKind::Chain) {
    if (c.meet.empty()) {
      note("meet table missing");
    } else if (check_square(c.meet, "meet")) {
      bool in_range = true;
      for (const auto& row : c.meet)
        for (int v : row)
          if (v < 0 || v >= n) in_range = false;
      if (!in_range) {
        note("meet table entry outside the carrier");
      } else {
        for (int a = 0; a < n; ++a)
          if (c.meet[a][a] != a) note("meet not idempotent at (" + c.labels[a] + ")");
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (c.meet[a][b] != c.meet[b][a])
              note("meet not commutative at (" + c.labels[a] + "," + c.labels[b] + ")");
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
              if (c.meet[c.meet[a][b]][d] != c.meet[a][c.meet[b][d]])
                note("meet not associative at (" + c.labels[a] + "," + c.labels[b] +
                     "," + c.labels[d] + ")");
        // On chains the meet must be the pointwise minimum under the order.
        if (c.kind == CarrierKind::Chain && !c.order.empty())
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              const int expected = c.order[a][b] ? a : b;
              if (c.meet[a][b] != expected)
                note("chain meet differs from order minimum at (" + c.labels[a] +
                     "," + c.labels[b] + ")");
            }
      }
    }
  }

  if (c.kind == CarrierKind::ModRing && c.modulus != n)
    note("modulus does not equal the element count");

  return report;
}

}  // namespace gtp

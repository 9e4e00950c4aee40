#pragma once

#include <string>
#include <vector>

namespace gtp {

enum class CarrierKind { Plain, Chain, Lattice, ModRing };

const char* to_string(CarrierKind k);

// A finite set of labeled elements with optional structure. Elements are
// addressed by index 0..size-1; the declaration order is the canonical
// enumeration order used for tie-breaking everywhere.
struct Carrier {
  CarrierKind kind = CarrierKind::Plain;
  std::vector<std::string> labels;
  // order[a][b] <=> a <= b; present for chains and lattices (derived from
  // the meet table for lattices).
  std::vector<std::vector<bool>> order;
  // meet[a][b]; present for chains (pointwise minimum) and lattices.
  std::vector<std::vector<int>> meet;
  int modulus = 0;  // ModRing only; element i is the residue i.

  int size() const { return static_cast<int>(labels.size()); }
  bool has_order() const { return !order.empty(); }
  bool has_meet() const { return !meet.empty(); }
  bool leq(int a, int b) const { return order[a][b]; }
  int meet_of(int a, int b) const { return meet[a][b]; }
  // -1 if the label is unknown.
  int index_of_label(const std::string& label) const;

  bool operator==(const Carrier&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

Carrier make_plain(std::vector<std::string> labels);
Carrier make_plain(int n);
Carrier make_chain(int n);
Carrier make_lattice(std::vector<std::string> labels,
                     std::vector<std::vector<int>> meet_table);
Carrier make_modring(int p);

// Report-only: lists every violated structural invariant (empty iff valid).
ValidationReport validate_carrier(const Carrier& c);

}  // namespace gtp

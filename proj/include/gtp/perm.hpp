#pragma once

#include <cstddef>
#include <vector>

#include "gtp/carrier.hpp"

namespace gtp {

// Permutation of carrier indices as an image vector: p[i] is the image of i.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p, int n);
Perm identity_perm(int n);
// (f after g): apply g first, then f.
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& p);

// A finite permutation group acting on a carrier, given by generators and
// materialized eagerly. `elements` is closed under composition and inverse,
// contains the identity, and is sorted lexicographically so iteration order
// is reproducible.
struct PermAction {
  Carrier carrier;
  std::vector<Perm> generators;
  std::vector<Perm> elements;

  std::size_t order() const { return elements.size(); }

  static PermAction generate(Carrier carrier, std::vector<Perm> generators,
                             std::size_t max_elements = 20'000);
};

PermAction trivial_action(const Carrier& c);
// The cyclic group generated by i -> i+1 (mod size); the translation group
// on a modular-ring carrier.
PermAction cyclic_shift_action(const Carrier& c);

}  // namespace gtp

#include "gtp/perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gtp/error.hpp"

namespace gtp {

bool is_permutation(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

PermAction PermAction::generate(Carrier carrier, std::vector<Perm> generators,
                                std::size_t max_elements) {
  const int n = carrier.size();
  for (const Perm& g : generators)
    if (!is_permutation(g, n))
      throw std::invalid_argument("action generator is not a bijection of the carrier");

  std::set<Perm> closed;
  std::vector<Perm> frontier;
  closed.insert(identity_perm(n));
  frontier.push_back(identity_perm(n));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& g : generators) {
        Perm prod = compose(g, e);
        if (closed.insert(prod).second) {
          if (closed.size() > max_elements)
            throw ResourceLimitError("generated group exceeds " +
                                     std::to_string(max_elements) + " elements");
          next.push_back(std::move(prod));
        }
      }
    frontier = std::move(next);
  }
  // A finite set closed under composition and containing the identity is
  // closed under inverses as well.

  PermAction a;
  a.carrier = std::move(carrier);
  a.generators = std::move(generators);
  a.elements.assign(closed.begin(), closed.end());
  return a;
}

PermAction trivial_action(const Carrier& c) { return PermAction::generate(c, {}); }

PermAction cyclic_shift_action(const Carrier& c) {
  const int n = c.size();
  Perm shift(n);
  for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return PermAction::generate(c, {shift});
}

}  // namespace gtp

#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "parker/dessin.hpp"
#include "parker/perm.hpp"

namespace parker::test {

// 1-based cycles, as written in cycle notation.
inline Perm cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  for (auto& c : cycles)
    for (auto& p : c) --p;
  return Perm::from_cycles(n, cycles);
}

// Closure by repeated multiplication of everything found so far; no BFS, no
// hashing, no tables. Slow but obviously correct.
inline std::set<Perm> naive_closure(const std::vector<Perm>& gens) {
  std::set<Perm> found{Perm(gens.front().degree())};
  found.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> now(found.begin(), found.end());
    for (const auto& p : now)
      for (const auto& q : now)
        grew = found.insert(compose(p, q)).second || grew;
  }
  return found;
}

// Simultaneous relabeling of a dessin by sigma.
inline Dessin relabel(const Dessin& d, const Perm& sigma) {
  return Dessin(conjugate(d.a(), sigma), conjugate(d.b(), sigma));
}

}  // namespace parker::test

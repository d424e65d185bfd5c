#pragma once

// brute-force oracles kept independent of the library's production paths

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "latrep/congruence.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"

namespace testutil {

using latrep::Lattice;
using latrep::Partition;
using latrep::Poset;

// every poset admits a labeling where the order respects the index order, so
// enumerating edge subsets on i < j and closing transitively reaches every
// isomorphism class
inline std::vector<Poset> all_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Poset> out;
  std::set<std::string> seen;
  for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> rel;
    for (size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) rel.push_back(slots[s]);
    Poset p = Poset::from_relations(n, rel);
    std::string sig = latrep::canonical_signature(p);
    if (seen.insert(sig).second) out.push_back(std::move(p));
  }
  return out;
}

inline bool poset_is_lattice(const Poset& p) {
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int lub = -1, glb = -1;
      for (int z = 0; z < n && lub < 0; ++z) {
        if (!(p.leq(x, z) && p.leq(y, z))) continue;
        bool least = true;
        for (int w = 0; w < n; ++w)
          if (p.leq(x, w) && p.leq(y, w) && !p.leq(z, w)) least = false;
        if (least) lub = z;
      }
      if (lub < 0) return false;
      for (int z = 0; z < n; ++z) {
        if (!(p.leq(z, x) && p.leq(z, y))) continue;
        bool greatest = true;
        for (int w = 0; w < n; ++w)
          if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
        if (greatest) {
          glb = z;
          break;
        }
      }
      if (glb < 0) return false;
    }
  return n >= 1;
}

inline std::vector<Lattice> all_lattices(int n) {
  std::vector<Lattice> out;
  for (const Poset& p : all_posets(n))
    if (poset_is_lattice(p)) out.push_back(Lattice::from_poset(p));
  return out;
}

inline std::vector<Lattice> all_lattices_upto(int n) {
  std::vector<Lattice> out;
  for (int k = 1; k <= n; ++k)
    for (Lattice& l : all_lattices(k)) out.push_back(std::move(l));
  return out;
}

// restricted growth strings
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < n; ++x) {
      if (rgs[x] >= (int)blocks.size()) blocks.emplace_back();
      blocks[rgs[x]].push_back(x);
    }
    out.push_back(Partition::from_blocks(n, blocks));
    int i = n - 1;
    for (; i > 0; --i) {
      int maxpre = 0;
      for (int j = 0; j < i; ++j) maxpre = std::max(maxpre, rgs[j]);
      if (rgs[i] <= maxpre) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

// named small lattices
inline Lattice chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Lattice::from_poset(Poset::from_relations(n, rel));
}
inline Lattice b2() {
  return Lattice::from_poset(Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                                   {"o", "a", "b", "i"}));
}
inline Lattice m3() {
  return Lattice::from_poset(Poset::from_relations(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"o", "p", "q", "r", "i"}));
}
inline Lattice m4() {
  return Lattice::from_poset(
      Poset::from_relations(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}));
}
inline Lattice n5() {
  return Lattice::from_poset(Poset::from_relations(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                                                   {"o", "x", "y", "z", "i"}));
}
inline Lattice hexagon() {
  return Lattice::from_poset(Poset::from_relations(
      6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}}, {"o", "a", "b", "c", "d", "i"}));
}
// the six-element lattice with exactly three congruences: a doubled atom on a
// covering diamond
inline Lattice n6() {
  return Lattice::from_poset(Poset::from_relations(
      6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 5}, {0, 4}, {4, 5}},
      {"o", "x1", "x2", "y", "z", "i"}));
}

}  // namespace testutil

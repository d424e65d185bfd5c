#pragma once

#include <utility>
#include <vector>

#include "latrep/lattice.hpp"

namespace latrep {

// finite distributive lattice with its generator poset; elements carry their
// downset encoding over the generators
class DistributiveLattice {
 public:
  // lattice of all downsets of p, ordered by containment
  static DistributiveLattice from_poset(const Poset& p);
  // validates distributivity, then rebuilds from the join-irreducibles and
  // checks the rebuilt copy is isomorphic
  static DistributiveLattice from_lattice(const Lattice& d);

  const Lattice& lattice() const { return lat_; }
  const Poset& generators() const { return gens_; }
  const std::vector<Bits>& element_downsets() const { return enc_; }

  Poset ji_poset() const;               // join-irreducibles of the lattice, as a poset
  std::vector<int> ji_elements() const;  // their indices in the lattice

 private:
  Lattice lat_;
  Poset gens_;
  std::vector<Bits> enc_;
};

bool is_distributive(const Lattice& l);

std::vector<int> dual_atoms(const Lattice& l);

// bijection between dual atoms and maximal join-irreducibles; both directions
// are computed independently and checked to compose to the identity
struct DualAtomCorrespondence {
  std::vector<std::pair<int, int>> pairs;  // (dual atom, maximal ji element), lattice indices
};
DualAtomCorrespondence corr_dual_atoms_maximal(const DistributiveLattice& d);

}  // namespace latrep

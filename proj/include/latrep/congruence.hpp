#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latrep/bits.hpp"
#include "latrep/lattice.hpp"
#include "latrep/report.hpp"

namespace latrep {

// set partition in canonical form: each element is tagged with the least
// element of its block
class Partition {
 public:
  Partition() = default;
  static Partition discrete(int n);
  static Partition full(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return (int)rep_.size(); }
  int rep(int x) const { return rep_[x]; }
  bool same(int x, int y) const { return rep_[x] == rep_[y]; }
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_of(int x) const;
  int block_count() const;

  bool refines(const Partition& o) const;  // this <= o
  bool operator==(const Partition& o) const { return rep_ == o.rep_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return rep_ < o.rep_; }

  const std::vector<int>& reps() const { return rep_; }
  static Partition from_reps(std::vector<int> reps);  // canonicalizes

 private:
  std::vector<int> rep_;
};

// equivalence-join (transitive closure of the union); for congruences of a
// common lattice this is again a congruence
Partition partition_join(const Partition& a, const Partition& b);

struct Congruence {
  Partition part;
  uint64_t home = 0;  // hash of the home lattice

  bool same(int x, int y) const { return part.same(x, y); }
  bool operator==(const Congruence& o) const { return home == o.home && part == o.part; }
  bool operator<(const Congruence& o) const {
    return home != o.home ? home < o.home : part < o.part;
  }
};

// smallest congruence collapsing each given pair (on top of `base` if given)
Partition congruence_closure(const Lattice& l, const std::vector<std::pair<int, int>>& pairs,
                             const Partition* base = nullptr);

// con(a, b) = con(a ^ b, a v b)
Congruence principal_congruence(const Lattice& l, int a, int b);

// definitional check: blocks compatible with both operations
bool is_congruence(const Lattice& l, const Partition& p);

// cover-configuration criterion for interval-block equivalences; agrees with
// is_congruence on its domain, throws BlocksNotIntervals outside it
bool technical_check(const Lattice& l, const Partition& p);

Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b);

struct SublatticeRestriction {
  Lattice sub;
  Congruence cong;
  std::vector<int> elems;  // sub index -> l index
};
SublatticeRestriction restriction(const Lattice& l, const Congruence& a,
                                  const std::vector<int>& sublattice_elems);

// Con L through its join-irreducible members; every congruence is the join of
// the join-irreducible ones below it, encoded as a bitmask over `ji`
struct ConStructure {
  uint64_t home = 0;
  int n = 0;                   // size of the home lattice
  std::vector<Partition> ji;   // join-irreducible congruences, deterministic order
  Poset ji_order;              // refinement order on ji
  std::vector<Bits> ji_down;   // per ji: downset mask (including itself)
  std::vector<Bits> pair_mask; // n*n: mask of con(x, y)
  Bits zero_mask, one_mask;

  const Bits& mask(int x, int y) const;
  Partition partition_of(const Bits& mask) const;
  bool mask_is_join_irreducible(const Bits& mask) const;  // equals some ji_down
  int ji_index_of(const Bits& mask) const;                // -1 if not a ji mask
};

ConStructure con_structure(const Lattice& l);

// all congruences (downset closure of the join-irreducible poset)
std::vector<Partition> all_congruences(const Lattice& l);
std::vector<Partition> all_congruences(const Lattice& l, const ConStructure& cs);

// {con(x, y) : x <= y}, deduplicated, deterministic order
std::vector<Congruence> principal_set(const Lattice& l);

class DistributiveLattice;  // distributive.hpp

// certificate that L is a minimal representation of D: Ji(Con L) iso Ji(D) and
// every principal congruence lies in {0, 1} + Ji(Con L)
VerificationReport is_minimal_representation(const Lattice& l, const DistributiveLattice& d);

}  // namespace latrep

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latrep/poset.hpp"

namespace latrep {

// finite lattice: validated order plus join/meet tables
class Lattice {
 public:
  Lattice() = default;
  static Lattice from_poset(const Poset& p);  // throws NotALattice with witness

  int size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  bool lt(int x, int y) const { return order_.lt(x, y); }
  bool leq(int x, int y) const { return order_.leq(x, y); }
  int join(int x, int y) const { return join_[x * size() + y]; }
  int meet(int x, int y) const { return meet_[x * size() + y]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::string& label(int x) const { return order_.label(x); }
  int index_of_label(const std::string& s) const { return order_.index_of_label(s); }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> upper_covers(int x) const { return order_.upper_covers(x); }
  std::vector<int> lower_covers(int x) const { return order_.lower_covers(x); }
  bool covers_pair(int x, int y) const { return order_.covers(x, y); }

  // stable content hash of the cover digraph (labels excluded)
  uint64_t hash() const { return hash_; }

 private:
  Poset order_;
  std::vector<int> join_, meet_;
  std::vector<std::pair<int, int>> covers_;
  int bottom_ = -1, top_ = -1;
  uint64_t hash_ = 0;
};

Lattice dual(const Lattice& l);

struct GluedSum {
  Lattice lattice;
  std::vector<int> embed_lower;  // L0 index -> sum index
  std::vector<int> embed_upper;  // L1 index -> sum index
};
// identifies top of l0 with bottom of l1
GluedSum glued_sum(const Lattice& l0, const Lattice& l1);

// adjoins a relative complement u of c in [a,b]; requires a -< c -< b.
// u is appended as the last element, existing indices are preserved.
Lattice adjoin_relative_complement(const Lattice& k, int a, int c, int b,
                                   const std::string& u_label);

struct Irreducibility {
  bool meet_irreducible;  // exactly one upper cover
  bool join_irreducible;  // exactly one lower cover
};
Irreducibility irreducibility(const Lattice& l, int x);

int length(const Lattice& l);  // edges in the longest cover chain

// elements with exactly one lower cover, as a subposet of l
std::vector<int> join_irreducible_elements(const Lattice& l);

bool is_sublattice_set(const Lattice& l, const std::vector<int>& elems);
Lattice sublattice(const Lattice& l, const std::vector<int>& elems);

}  // namespace latrep

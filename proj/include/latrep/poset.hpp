#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latrep/bits.hpp"

namespace latrep {

// finite ordered set over dense indices 0..n-1; labels are metadata only
class Poset {
 public:
  Poset() = default;

  // closes the given pairs reflexively-transitively; rejects cycles
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& pairs,
                              std::vector<std::string> labels = {});
  // takes an already-strict order; validates irreflexive/antisymmetric/transitive
  static Poset from_strict(int n, const std::vector<Bits>& lt,
                           std::vector<std::string> labels);

  int size() const { return n_; }
  bool lt(int x, int y) const { return up_[x].test(y); }
  bool leq(int x, int y) const { return x == y || up_[x].test(y); }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& s) const;  // -1 if absent

  const Bits& strict_up(int x) const { return up_[x]; }    // { y : x < y }
  const Bits& strict_down(int x) const { return down_[x]; }  // { y : y < x }

  bool covers(int x, int y) const;                      // x -< y
  std::vector<std::pair<int, int>> cover_pairs() const;  // transitive reduction
  std::vector<int> upper_covers(int x) const;
  std::vector<int> lower_covers(int x) const;

  int height(int x) const { return heights_[x]; }  // longest chain below x (edges)

  Poset dual() const;
  Poset induced(const std::vector<int>& elems) const;
  Poset relabeled(std::vector<std::string> labels) const;

  bool operator==(const Poset& o) const {
    return n_ == o.n_ && up_ == o.up_;  // labels ignored
  }

 private:
  int n_ = 0;
  std::vector<Bits> up_, down_;
  std::vector<std::string> labels_;
  std::vector<int> heights_;
  void finish();
};

struct IsoMap {
  std::vector<int> forward;  // P index -> Q index
  std::vector<int> inverse;
};

std::vector<int> maximal_elements(const Poset& p);
std::vector<int> minimal_elements(const Poset& p);
std::vector<int> downset_of(const Poset& p, int x);  // { y : y <= x }, sorted
Poset free_union(const Poset& a, const Poset& b);

// order isomorphism by backtracking with invariant pruning; deterministic
std::optional<IsoMap> find_isomorphism(const Poset& a, const Poset& b);
bool verify_isomorphism(const Poset& a, const Poset& b, const IsoMap& f);

// total order refining p; ties broken by index.  minimal_first picks minimal
// elements of the remainder, otherwise maximal ones (top-down order).
std::vector<int> linear_extension(const Poset& p, bool minimal_first = true);

// lexicographically minimal strict-order matrix over all relabelings
std::string canonical_signature(const Poset& p);

std::vector<std::string> default_labels(int n, const std::string& prefix = "x");

}  // namespace latrep

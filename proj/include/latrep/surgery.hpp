#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "latrep/poset.hpp"

namespace latrep {

// fusing a convex subset A to a single point
struct FusionResult {
  Poset fused;            // (P - A) + {iota}; iota is the last index
  int iota;
  std::vector<int> psi;   // P index -> fused index (constant on A)
};
FusionResult fuse(const Poset& p, const std::vector<int>& a);

// the unique factorization of an isotone map that is constant on A through psi
std::vector<int> fuse_factor(const Poset& p, const std::vector<int>& a, const Poset& q,
                             const std::vector<int>& phi);

// either the induced isomorphism Fuse(P,A) -> Q, or a pair witnessing that the
// collapse hypothesis fails
struct FuseIsoFailure {
  int x, y;  // x !<= y in P but phi(x) <= phi(y), with no bridging pair in A
};
std::variant<IsoMap, FuseIsoFailure> fuse_iso_check(const Poset& p, const std::vector<int>& a,
                                                    const Poset& q, const std::vector<int>& phi);

// splitting a maximal element of P0 ^ P1 into two incomparable copies
struct SplitResult {
  Poset split;            // (P - {a}) + {a0, a1}; a0, a1 are the last two indices
  int a0, a1;
  std::vector<int> eta;   // split index -> P index
  std::vector<int> side0, side1;  // images of P0, P1 in the split poset
};
SplitResult split(const Poset& p, int a, const std::vector<int>& p0,
                  const std::vector<int>& p1);

// Fuse(Split(P,a), {a0,a1}) is order isomorphic to P; built, then verified
IsoMap split_fuse_roundtrip(const Poset& p, int a, const std::vector<int>& p0,
                            const std::vector<int>& p1);

}  // namespace latrep

#pragma once

#include <optional>
#include <utility>

#include "latrep/congruence.hpp"
#include "latrep/construct.hpp"
#include "latrep/distributive.hpp"
#include "latrep/report.hpp"

namespace latrep {

// the five frame statements: all principal congruences join-irreducible,
// everything collapses against the top, anchor chains generate the claimed
// congruences, anchors meet-irreducible, everything below an anchor collapses.
// all congruences are recomputed from the lattice; stored metadata is not trusted.
VerificationReport check_frame_properties(const AnchoredLattice& al);

// the nine statements of a two-sided base (or of any bridge stage, against the
// currently represented poset); p0/p1 are indices into al.represented
VerificationReport check_nine_statements(const AnchoredLattice& al, int p0, int p1);

// the six bridge statements for an attachment K -> L at the given anchors
VerificationReport check_bridge_theorem(const Lattice& k, const Lattice& l, int a, int b, int i,
                                        int bprime, int aprime);

// the five preservation conditions around a spine a -< b -< i -< b' -< a'
VerificationReport check_tmin(const Lattice& l, int a, int b, int i, int bprime, int aprime);

// three or more maximal join-irreducibles, with the witnessing antichain
std::optional<Obstruction> antichain_obstruction(const DistributiveLattice& d);

// given an antichain A of join-irreducible congruences joining to con(x, y),
// produce for alpha in A a join-irreducible beta with alpha v beta principal
// and join-reducible, by walking a maximal chain of [x, y]
struct PrincipalWitness {
  Congruence beta;
  std::pair<int, int> principal_pair;  // realizes alpha v beta
};
PrincipalWitness tprincipal_witness(const Lattice& l, int x, int y,
                                    const std::vector<Congruence>& antichain,
                                    const Congruence& alpha);

}  // namespace latrep

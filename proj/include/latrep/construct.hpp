#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latrep/congruence.hpp"
#include "latrep/lattice.hpp"
#include "latrep/report.hpp"

namespace latrep {

// lattice with named anchor elements and a claimed correspondence between the
// represented poset and the join-irreducible congruences.
//
// labels: "o" bottom, "i" the hinge (top for a one-sided frame), "o'" top of a
// glued base; per poset element x: "a(x)", "b(x)" below the hinge and
// "a'(x)", "b'(x)" above it.
struct AnchoredLattice {
  Lattice lattice;
  Poset represented;                            // current represented poset
  std::vector<std::pair<int, int>> zeta_pair;   // represented idx -> generating pair (lo, hi)
  std::vector<int> side;                        // 0 below the hinge, 1 above, 2 bridged
  std::vector<std::string> base_label;          // label used inside anchor names
  int o = -1, i = -1, oprime = -1;              // oprime < 0 unless glued

  int anchor(const std::string& name) const { return lattice.index_of_label(name); }
  // anchor names for a represented element; which: "a", "b" (primed when upper)
  int lower_anchor(int q, const char* which) const {
    return anchor(std::string(which) + "(" + base_label[q] + ")");
  }
  int upper_anchor(int q, const char* which) const {
    return anchor(std::string(which) + "'(" + base_label[q] + ")");
  }
};

// witness that no minimal representation exists: three or more maximal
// join-irreducibles (equivalently dual atoms)
struct Obstruction {
  int dual_atom_count = 0;
  std::vector<int> antichain;          // element indices in the distributive lattice
  std::vector<std::string> labels;
};

struct TraceStep {
  std::string kind;
  std::string detail;
  int elements_before = 0;
  int elements_after = 0;
  uint64_t lattice_hash = 0;
  bool checks_passed = false;
  Lattice snapshot;  // the lattice after this step; steps replay the build
};
struct ConstructionTrace {
  std::vector<TraceStep> steps;
};

// bounded parallel chains o -< a(p) -< b(p) -< i, one per poset element
AnchoredLattice frame(const Poset& p);

// frame with a coupling gadget inserted for every comparable pair, plus two
// crash spokes; the five-statement contract is recomputed on every call and a
// violation is a hard error.  a one-element poset yields the two-element chain.
AnchoredLattice framew(const Poset& p);

// glued sum of the frame of the lower cone and the dual frame of the upper
// cone; checked against the nine-statement contract for the free union
AnchoredLattice base(const Poset& p, int p0, int p1, ConstructionTrace* trace = nullptr);

// the ten-element bridge over a five-element spine, elements subscripted by r
AnchoredLattice bridge_gadget(const std::string& r);

struct BridgeInstance {
  Lattice before;  // K
  Lattice after;   // L, K's indices preserved
  int a, b, i, bprime, aprime;
  std::string label;
};

// five successive relative-complement adjunctions between [a,b] and [b',a'];
// hypotheses validated, bridge statements checked afterwards
AnchoredLattice attach_bridge(const AnchoredLattice& k, const std::string& r_label,
                              BridgeInstance* capture = nullptr);

struct SynthesisResult {
  std::optional<AnchoredLattice> lattice;       // set on success
  std::optional<Obstruction> obstruction;       // set when >= 3 maximal elements
  VerificationReport certificate;
  ConstructionTrace trace;
  std::vector<BridgeInstance> bridges;          // filled when requested
};

// end-to-end synthesis from the join-irreducible poset
SynthesisResult minimal_representation(const Poset& ji_poset, bool collect_bridges = false);

}  // namespace latrep

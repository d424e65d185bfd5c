#include <doctest.h>

#include "latrep/construct.hpp"
#include "latrep/distributive.hpp"
#include "latrep/errors.hpp"
#include "latrep/verify.hpp"
#include "test_util.hpp"

using namespace latrep;

TEST_CASE("plain frames") {
  Poset two = Poset::from_relations(2, {{0, 1}}, {"p", "q"});
  AnchoredLattice f2 = frame(two);
  CHECK(f2.lattice.size() == 6);
  CHECK(length(f2.lattice) == 3);
  int ap = f2.anchor("a(p)"), aq = f2.anchor("a(q)");
  int bp = f2.anchor("b(p)"), bq = f2.anchor("b(q)");
  CHECK(f2.lattice.join(ap, aq) == f2.i);
  CHECK(f2.lattice.meet(bp, bq) == f2.o);

  AnchoredLattice f1 = frame(Poset::from_relations(1, {}, {"p"}));
  CHECK(f1.lattice.size() == 4);
  CHECK(length(f1.lattice) == 3);
}

TEST_CASE("frame with couplings satisfies its contract") {
  // contract checks run inside framew; reaching here means they passed
  AnchoredLattice w2 = framew(Poset::from_relations(2, {{0, 1}}, {"p", "q"}));
  CHECK(check_frame_properties(w2).pass);

  // three elements below a common top: the congruence poset reproduces it
  Poset p = Poset::from_relations(3, {{0, 2}, {1, 2}}, {"p", "q", "t"});
  AnchoredLattice w = framew(p);
  ConStructure cs = con_structure(w.lattice);
  CHECK(find_isomorphism(cs.ji_order, p).has_value());

  // no couplings between incomparable elements
  CHECK(w.anchor("k(p,q)") < 0);
  CHECK(w.anchor("k(q,p)") < 0);
  CHECK(w.anchor("k(p,t)") >= 0);
  CHECK(w.anchor("h(q,t)") >= 0);

  // one-element poset: the two-element chain
  AnchoredLattice w1 = framew(Poset::from_relations(1, {}, {"p"}));
  CHECK(w1.lattice.size() == 2);
}

TEST_CASE("bases") {
  // two incomparable elements: the glued sum of two two-element chains
  Poset a2 = Poset::from_relations(2, {}, {"p0", "p1"});
  AnchoredLattice b = base(a2, 0, 1);
  CHECK(b.lattice.size() == 3);

  // two disjoint chains: certified base, nothing to bridge
  Poset p = Poset::from_relations(4, {{0, 1}, {2, 3}}, {"x", "p0", "z", "p1"});
  AnchoredLattice bb = base(p, 1, 3);
  ConStructure cs = con_structure(bb.lattice);
  CHECK(find_isomorphism(cs.ji_order, p).has_value());

  // everything through the hinge collapses completely
  for (int x = 0; x < bb.lattice.size(); ++x)
    for (int y = 0; y < bb.lattice.size(); ++y)
      if (bb.lattice.lt(x, bb.i) && bb.lattice.lt(bb.i, y))
        CHECK(principal_congruence(bb.lattice, x, y).part ==
              Partition::full(bb.lattice.size()));
}

TEST_CASE("the bridge gadget") {
  AnchoredLattice g = bridge_gadget("r");
  CHECK(g.lattice.size() == 10);
  CHECK(g.lattice.covers().size() == 14);
  CHECK(length(g.lattice) == 4);

  // deleting the tab leaves the three-by-three grid
  int m = g.lattice.index_of_label("m(r)");
  std::vector<int> keep;
  for (int x = 0; x < 10; ++x)
    if (x != m) keep.push_back(x);
  Lattice grid = sublattice(g.lattice, keep);
  auto c33 = DistributiveLattice::from_poset(
      Poset::from_relations(4, {{0, 1}, {2, 3}}));
  CHECK(find_isomorphism(grid.order(), c33.lattice().order()).has_value());

  // the five inner elements form a modular diamond
  std::vector<int> five;
  for (const char* lbl : {"u(r)", "t(r)", "s(r)", "m(r)", "u'(r)"})
    five.push_back(g.lattice.index_of_label(lbl));
  std::sort(five.begin(), five.end());
  Lattice inner = sublattice(g.lattice, five);
  CHECK(find_isomorphism(inner.order(), testutil::m3().order()).has_value());
}

TEST_CASE("bridge attachment over the bare spine") {
  // a five-element chain carries exactly one bridge; the result is the gadget
  Poset spine = Poset::from_relations(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {"a(r)", "b(r)", "i", "b'(r)", "a'(r)"});
  Lattice k = Lattice::from_poset(spine);
  AnchoredLattice al;
  al.lattice = k;
  al.represented = Poset::from_relations(2, {}, {"r", "r2"});
  al.zeta_pair = {{0, 1}, {3, 4}};
  al.side = {0, 1};
  al.base_label = {"r", "r"};
  al.o = 0;
  al.i = 2;
  al.oprime = 4;
  // rename the upper copy so both anchors resolve
  {
    auto labels = al.represented.labels();
    labels[1] = "r'";
    al.represented = al.represented.relabeled(labels);
  }
  AnchoredLattice out = attach_bridge(al, "r");
  CHECK(out.lattice.size() == 10);
  CHECK(find_isomorphism(out.lattice.order(), bridge_gadget("r").lattice.order()).has_value());

  // the two tab intervals generate the same congruence as the anchor interval
  const Lattice& l = out.lattice;
  int u = l.index_of_label("u(r)"), m = l.index_of_label("m(r)"),
      up = l.index_of_label("u'(r)");
  Partition cum = principal_congruence(l, u, m).part;
  CHECK(cum == principal_congruence(l, m, up).part);
  CHECK(cum == principal_congruence(l, 0, 1).part);

  // three join-irreducible congruences remain, pairwise incomparable
  ConStructure cs = con_structure(l);
  CHECK(cs.ji.size() == 3);
  CHECK(find_isomorphism(cs.ji_order, Poset::from_relations(3, {})).has_value());
}

TEST_CASE("end-to-end synthesis") {
  // the nine-element grid: certified with no bridges
  Poset jig = Poset::from_relations(4, {{0, 1}, {2, 3}}, {"x", "p0", "z", "p1"});
  SynthesisResult grid = minimal_representation(jig);
  REQUIRE(grid.lattice.has_value());
  CHECK(grid.certificate.pass);

  // the eight-element Boolean lattice is obstructed
  SynthesisResult b3 = minimal_representation(Poset::from_relations(3, {}));
  REQUIRE(b3.obstruction.has_value());
  CHECK(b3.obstruction->dual_atom_count == 3);
  CHECK(!b3.lattice.has_value());

  // the two-element chain represents itself
  SynthesisResult c2 = minimal_representation(Poset::from_relations(1, {}, {"p"}));
  REQUIRE(c2.lattice.has_value());
  CHECK(c2.lattice->lattice.size() == 2);

  // one-element lattice for the empty poset
  SynthesisResult c1 = minimal_representation(Poset::from_relations(0, {}));
  REQUIRE(c1.lattice.has_value());
  CHECK(c1.lattice->lattice.size() == 1);

  // a shared element forces one bridge
  Poset v = Poset::from_relations(3, {{0, 1}, {0, 2}}, {"r", "p0", "p1"});
  SynthesisResult sv = minimal_representation(v, true);
  REQUIRE(sv.lattice.has_value());
  CHECK(sv.bridges.size() == 1);
  CHECK(sv.certificate.pass);
  ConStructure cs = con_structure(sv.lattice->lattice);
  CHECK(find_isomorphism(cs.ji_order, v).has_value());
}

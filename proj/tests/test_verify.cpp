#include <doctest.h>

#include "latrep/construct.hpp"
#include "latrep/errors.hpp"
#include "latrep/verify.hpp"
#include "test_util.hpp"

using namespace latrep;

TEST_CASE("frame checker accepts good frames and rejects broken ones") {
  AnchoredLattice good = framew(Poset::from_relations(2, {{0, 1}}, {"p", "q"}));
  CHECK(check_frame_properties(good).pass);

  // the bare four-chain frame of a one-element poset collapses nothing
  AnchoredLattice bare = frame(Poset::from_relations(1, {}, {"p"}));
  VerificationReport rep = check_frame_properties(bare);
  CHECK(!rep.pass);
  const CheckItem* item = rep.find("everything-collapses-against-top");
  REQUIRE(item != nullptr);
  CHECK(!item->pass);

  // a frame without its couplings fails outright
  AnchoredLattice plain = frame(Poset::from_relations(2, {{0, 1}}, {"p", "q"}));
  CHECK(!check_frame_properties(plain).pass);

  // tampering with zeta breaks the isomorphism item
  AnchoredLattice tampered = good;
  std::swap(tampered.zeta_pair[0], tampered.zeta_pair[1]);
  VerificationReport trep = check_frame_properties(tampered);
  CHECK(!trep.pass);
  CHECK(!trep.find("zeta-order-isomorphism")->pass);
}

TEST_CASE("nine-statement checker") {
  Poset p = Poset::from_relations(4, {{0, 1}, {2, 3}}, {"x", "p0", "z", "p1"});
  AnchoredLattice b = base(p, 1, 3);  // throws if the contract fails
  int q0 = -1, q1 = -1;
  for (int q = 0; q < b.represented.size(); ++q) {
    if (b.side[q] == 0 && b.base_label[q] == "p0") q0 = q;
    if (b.side[q] == 1 && b.base_label[q] == "p1") q1 = q;
  }
  CHECK(check_nine_statements(b, q0, q1).pass);

  // fault injection: claim a wrong zeta for one element
  AnchoredLattice broken = b;
  broken.zeta_pair[0] = {b.o, b.i};
  CHECK(!check_nine_statements(broken, q0, q1).pass);
}

TEST_CASE("bridge checker accepts the real attachment and catches a skipped step") {
  Poset spine = Poset::from_relations(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {"a", "b", "i", "b'", "a'"});
  Lattice k = Lattice::from_poset(spine);

  Lattice good = k;
  good = adjoin_relative_complement(good, 1, 2, 3, "t");
  good = adjoin_relative_complement(good, 0, 1, 5, "u");
  good = adjoin_relative_complement(good, 5, 3, 4, "u'");
  good = adjoin_relative_complement(good, 6, 5, 7, "s");
  good = adjoin_relative_complement(good, 6, 8, 7, "m");
  CHECK(check_bridge_theorem(k, good, 0, 1, 2, 3, 4).pass);

  // skipping the diagonal step leaves the bare grid: the comparison criterion
  // must fail with a witness
  Lattice bad = k;
  bad = adjoin_relative_complement(bad, 1, 2, 3, "t");
  bad = adjoin_relative_complement(bad, 0, 1, 5, "u");
  bad = adjoin_relative_complement(bad, 5, 3, 4, "u'");
  bad = adjoin_relative_complement(bad, 6, 5, 7, "s");
  VerificationReport rep = check_bridge_theorem(k, bad, 0, 1, 2, 3, 4);
  CHECK(!rep.pass);
  const CheckItem* item = rep.find("comparison-criterion");
  REQUIRE(item != nullptr);
  CHECK(!item->pass);
  CHECK(!item->witness.empty());
}

TEST_CASE("spine conditions") {
  // a bare five-chain has independent prime congruences, so the uniform
  // collapse conditions fail there; the checker must say so
  Lattice c5 = testutil::chain(5);
  VerificationReport bare = check_tmin(c5, 0, 1, 2, 3, 4);
  CHECK(!bare.pass);
  CHECK(!bare.find("below-hinge-uniform")->pass);

  // a certified base satisfies all five conditions at its bridgeable anchors
  Poset v = Poset::from_relations(3, {{0, 1}, {0, 2}}, {"r", "p0", "p1"});
  AnchoredLattice b = base(v, 1, 2);
  const Lattice& l = b.lattice;
  CHECK(check_tmin(l, l.index_of_label("a(r)"), l.index_of_label("b(r)"), b.i,
                   l.index_of_label("b'(r)"), l.index_of_label("a'(r)"))
            .pass);
}

TEST_CASE("antichain obstructions") {
  auto b3 = DistributiveLattice::from_poset(Poset::from_relations(3, {}));
  auto ob = antichain_obstruction(b3);
  REQUIRE(ob.has_value());
  CHECK(ob->dual_atom_count == 3);
  CHECK(ob->antichain.size() == 3);

  auto c33 = DistributiveLattice::from_poset(Poset::from_relations(4, {{0, 1}, {2, 3}}));
  CHECK(!antichain_obstruction(c33).has_value());

  auto b4 = DistributiveLattice::from_poset(Poset::from_relations(4, {}));
  CHECK(antichain_obstruction(b4)->dual_atom_count == 4);
}

TEST_CASE("principal witness procedure") {
  // on the five-chain, the interval [1,3] joins two incomparable steps
  Lattice c5 = testutil::chain(5);
  std::vector<Congruence> a{principal_congruence(c5, 1, 2), principal_congruence(c5, 2, 3)};
  PrincipalWitness w = tprincipal_witness(c5, 1, 3, a, a[0]);
  CHECK(w.beta.part == a[1].part);

  // glued diamonds: the lower square's two atom congruences join to the
  // congruence of the interval from the bottom to the hinge
  GluedSum g = glued_sum(testutil::b2(), testutil::b2());
  const Lattice& l = g.lattice;
  int hinge = g.embed_lower[3];
  std::vector<Congruence> a2{principal_congruence(l, 0, 1), principal_congruence(l, 0, 2)};
  PrincipalWitness w2 = tprincipal_witness(l, 0, hinge, a2, a2[0]);
  CHECK(!w2.beta.part.refines(a2[0].part));

  // not an antichain
  std::vector<Congruence> bad{a[0], a[0]};
  CHECK_THROWS_AS(tprincipal_witness(c5, 1, 3, bad, a[0]), HypothesisViolated);
}

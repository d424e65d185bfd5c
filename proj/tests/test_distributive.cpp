#include <doctest.h>

#include "latrep/distributive.hpp"
#include "test_util.hpp"

using namespace latrep;

TEST_CASE("downset lattices") {
  auto b2 = DistributiveLattice::from_poset(Poset::from_relations(2, {}));
  CHECK(b2.lattice().size() == 4);
  auto c3 = DistributiveLattice::from_poset(Poset::from_relations(2, {{0, 1}}));
  CHECK(c3.lattice().size() == 3);
  auto b3 = DistributiveLattice::from_poset(Poset::from_relations(3, {}));
  CHECK(b3.lattice().size() == 8);
  CHECK(is_distributive(b3.lattice()));
}

TEST_CASE("join-irreducibles invert the downset construction") {
  auto b2 = DistributiveLattice::from_poset(Poset::from_relations(2, {}));
  CHECK(find_isomorphism(b2.ji_poset(), Poset::from_relations(2, {})).has_value());
  auto c3 = DistributiveLattice::from_poset(Poset::from_relations(2, {{0, 1}}));
  CHECK(find_isomorphism(c3.ji_poset(), Poset::from_relations(2, {{0, 1}})).has_value());

  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : testutil::all_posets(n)) {
      auto d = DistributiveLattice::from_poset(p);
      CHECK(find_isomorphism(d.ji_poset(), p).has_value());
      CHECK(is_distributive(d.lattice()));
      CHECK((int)dual_atoms(d.lattice()).size() == (int)maximal_elements(p).size());
    }
  }
}

TEST_CASE("round trip through an explicit lattice") {
  auto d = DistributiveLattice::from_poset(Poset::from_relations(3, {{0, 1}}));
  auto rebuilt = DistributiveLattice::from_lattice(d.lattice());
  CHECK(find_isomorphism(rebuilt.generators(), d.generators()).has_value());
  CHECK_THROWS(DistributiveLattice::from_lattice(testutil::m3()));
}

TEST_CASE("dual atoms") {
  auto b3 = DistributiveLattice::from_poset(Poset::from_relations(3, {}));
  CHECK(dual_atoms(b3.lattice()).size() == 3);
  // the three-by-three grid has the two corner coatoms
  auto c33 = DistributiveLattice::from_poset(Poset::from_relations(4, {{0, 1}, {2, 3}}));
  CHECK(c33.lattice().size() == 9);
  CHECK(dual_atoms(c33.lattice()).size() == 2);
  CHECK(dual_atoms(testutil::chain(2)).size() == 1);
}

TEST_CASE("dual atom correspondence is a verified bijection") {
  for (auto rel : {std::vector<std::pair<int, int>>{}, {{0, 1}}}) {
    auto d = DistributiveLattice::from_poset(Poset::from_relations(2, rel));
    auto corr = corr_dual_atoms_maximal(d);
    CHECK(corr.pairs.size() == dual_atoms(d.lattice()).size());
  }
  auto b3 = DistributiveLattice::from_poset(Poset::from_relations(3, {}));
  CHECK(corr_dual_atoms_maximal(b3).pairs.size() == 3);
}

TEST_CASE("distributivity check") {
  CHECK(!is_distributive(testutil::m3()));
  CHECK(!is_distributive(testutil::n5()));
  for (int n = 1; n <= 6; ++n) CHECK(is_distributive(testutil::chain(n)));
}

#include <doctest.h>

#include <sstream>

#include "latrep/enumerate.hpp"
#include "latrep/errors.hpp"
#include "test_util.hpp"

using namespace latrep;

TEST_CASE("lattice counts match the independent poset filter") {
  auto counts = lattice_counts(6);
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 1);
  CHECK(counts[4] == 2);
  CHECK(counts[5] == 5);
  CHECK(counts[6] == 15);
  for (int n = 1; n <= 6; ++n)
    CHECK(counts[n] == (long)testutil::all_lattices(n).size());
}

TEST_CASE("a six-element lattice represents the three-element chain minimally") {
  // the three-chain as a distributive lattice has the two-chain of
  // join-irreducibles; some six-element lattice realizes it with a minimal
  // principal congruence set
  std::string want = canonical_signature(Poset::from_relations(2, {{0, 1}}));
  bool found = false;
  EnumerationOptions opts;
  opts.max_n = 6;
  enumerate_lattices(opts, [&](const EnumerationRecord& r) {
    if (r.elements == 6 && r.ji_con_signature == want && r.minimal_representation) found = true;
  });
  CHECK(found);
}

TEST_CASE("enumeration is deterministic and restartable") {
  auto run = [](int jobs) {
    std::ostringstream out;
    EnumerationOptions opts;
    opts.max_n = 6;
    opts.jobs = jobs;
    enumerate_lattices(opts, [&](const EnumerationRecord& r) {
      out << r.elements << ":" << r.canonical << ":" << r.princ_count << ":" << r.min_count
          << ":" << r.minimal_representation << "\n";
    });
    return out.str();
  };
  std::string a = run(1);
  CHECK(a == run(1));
  CHECK(a == run(3));
}

TEST_CASE("the bound is enforced") {
  EnumerationOptions opts;
  opts.max_n = 12;
  CHECK_THROWS_AS(enumerate_lattices(opts, [](const EnumerationRecord&) {}), Error);
}

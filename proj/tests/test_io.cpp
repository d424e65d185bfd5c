#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "latrep/commands.hpp"
#include "latrep/construct.hpp"
#include "latrep/errors.hpp"
#include "latrep/json_io.hpp"
#include "test_util.hpp"

using namespace latrep;

TEST_CASE("poset and lattice JSON round trips") {
  Poset p = Poset::from_relations(3, {{0, 1}, {0, 2}}, {"q", "p0", "p1"});
  Poset back = poset_from_json(poset_to_json(p));
  CHECK(back == p);
  CHECK(back.labels() == p.labels());

  Lattice l = testutil::hexagon();
  Lattice lback = lattice_from_json(lattice_to_json(l));
  CHECK(lback.order() == l.order());
  CHECK(lback.covers() == l.covers());

  CHECK_THROWS_AS(poset_from_json(nlohmann::json{{"relations", {{0, 1}}}}), MalformedInput);
  CHECK_THROWS_AS(
      poset_from_json(nlohmann::json{{"elements", {"a", "b"}}, {"relations", {{0, 5}}}}),
      MalformedInput);
}

TEST_CASE("congruence JSON uses canonical blocks") {
  Lattice c3 = testutil::chain(3);
  auto j = congruence_to_json(c3, principal_congruence(c3, 1, 2).part);
  CHECK(j["blocks"].size() == 2);
  CHECK(j["blocks"][0][0] == 0);
  CHECK(j.contains("lattice"));
}

TEST_CASE("DOT export") {
  AnchoredLattice g = bridge_gadget("r");
  std::string dot = lattice_to_dot(g.lattice);
  int nodes = 0, edges = 0;
  for (size_t pos = 0; (pos = dot.find("label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 10);
  CHECK(edges == 14);

  std::string c3dot = lattice_to_dot(testutil::chain(3));
  int c3edges = 0;
  for (size_t pos = 0; (pos = c3dot.find("->", pos)) != std::string::npos; ++pos) ++c3edges;
  CHECK(c3edges == 2);
}

namespace {

std::string write_fixture(const std::string& name, const std::string& text) {
  std::string path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("command exit codes") {
  std::ostringstream out, err;
  std::string two = write_fixture("latrep_two_chains.json",
                                  R"({"elements":["x","y","z","w"],"relations":[[0,1],[2,3]]})");
  std::string anti =
      write_fixture("latrep_antichain3.json", R"({"elements":["x","y","z"],"relations":[]})");
  std::string cyc =
      write_fixture("latrep_cycle.json", R"({"elements":["x","y"],"relations":[[0,1],[1,0]]})");
  std::string c3 =
      write_fixture("latrep_c3.json", R"({"elements":["o","m","i"],"covers":[[0,1],[1,2]]})");

  SynthesizeOptions so;
  so.input = two;
  CHECK(cmd_synthesize(so, out, err) == 0);

  SynthesizeOptions ob;
  ob.input = anti;
  CHECK(cmd_synthesize(ob, out, err) == 2);

  SynthesizeOptions cy;
  cy.input = cyc;
  CHECK(cmd_synthesize(cy, out, err) == 1);

  SynthesizeOptions missing;
  missing.input = "/nonexistent/x.json";
  CHECK(cmd_synthesize(missing, out, err) == 1);

  VerifyOptions vo;
  vo.lattice_input = c3;
  vo.d_input = write_fixture("latrep_b2p.json", R"({"elements":["x","y"],"relations":[]})");
  CHECK(cmd_verify(vo, out, err) == 0);

  ExportOptions xf;
  xf.input = c3;
  xf.format = "docx";
  CHECK(cmd_export(xf, out, err) == 1);
  xf.format = "dot";
  CHECK(cmd_export(xf, out, err) == 0);

  EnumerateOptions eo;
  eo.max_n = 5;
  CHECK(cmd_enumerate(eo, out, err) == 0);
  eo.max_n = 30;
  CHECK(cmd_enumerate(eo, out, err) == 1);
}

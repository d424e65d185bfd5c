#include <CLI11.hpp>

#include "latrep/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"minimal representations of finite distributive lattices by principal congruences"};
  app.require_subcommand(1);
  bool seed_free = true;
  app.add_flag("--seed-free", seed_free,
               "assert deterministic operation (always on; no randomness anywhere)");

  latrep::SynthesizeOptions so;
  auto* synth = app.add_subcommand(
      "synthesize", "build and certify a minimal representation for a poset or lattice");
  synth->add_option("--input", so.input, "poset or distributive-lattice JSON ('-' = stdin)")
      ->required();
  synth->add_option("--output", so.output, "write the result JSON here (default stdout)");
  synth->add_option("--trace", so.trace_dir, "directory for per-step dumps");
  synth->add_flag("--dot", so.dot, "also print the Hasse diagram");

  latrep::VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check a lattice against a distributive lattice");
  verify->add_option("--input", vo.lattice_input, "lattice JSON")->required();
  verify->add_option("--against", vo.d_input, "distributive lattice or poset JSON")->required();

  latrep::EnumerateOptions eo;
  auto* enumerate =
      app.add_subcommand("enumerate", "list all lattices up to isomorphism, classified");
  enumerate->add_option("--max-n", eo.max_n, "largest element count (default 9)");
  enumerate->add_option("--jobs", eo.jobs, "worker threads");
  enumerate->add_flag("--only-minimal", eo.only_minimal,
                      "keep lattices whose principal congruences form a minimal set");
  enumerate->add_option("--represents", eo.represents,
                        "poset JSON: keep lattices with Ji(Con L) isomorphic to it");

  latrep::ExportOptions xo;
  auto* exp = app.add_subcommand("export", "render a lattice as DOT or JSON");
  exp->add_option("--input", xo.input, "lattice JSON")->required();
  exp->add_option("--format", xo.format, "dot | json");
  exp->add_option("--output", xo.output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  if (synth->parsed()) return latrep::cmd_synthesize(so, std::cout, std::cerr);
  if (verify->parsed()) return latrep::cmd_verify(vo, std::cout, std::cerr);
  if (enumerate->parsed()) return latrep::cmd_enumerate(eo, std::cout, std::cerr);
  if (exp->parsed()) return latrep::cmd_export(xo, std::cout, std::cerr);
  return 1;
}

#include "latrep/commands.hpp"

#include <fstream>

#include "latrep/construct.hpp"
#include "latrep/distributive.hpp"
#include "latrep/enumerate.hpp"
#include "latrep/errors.hpp"
#include "latrep/json_io.hpp"
#include "latrep/verify.hpp"

namespace latrep {

namespace {

// a synthesis input is either the join-irreducible poset itself or a
// distributive lattice to take it from
Poset read_ji_poset(const std::string& path) {
  nlohmann::json j = load_json_file(path);
  if (j.contains("relations")) return poset_from_json(j);
  if (j.contains("covers")) {
    DistributiveLattice d = DistributiveLattice::from_lattice(lattice_from_json(j));
    return d.generators();
  }
  throw MalformedInput("input needs \"relations\" (poset) or \"covers\" (lattice)");
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw MalformedInput("cannot write " + path);
  f << text;
}

}  // namespace

int cmd_synthesize(const SynthesizeOptions& o, std::ostream& out, std::ostream& err) {
  try {
    Poset p = read_ji_poset(o.input);
    SynthesisResult res = minimal_representation(p);
    if (!o.trace_dir.empty()) {
      int step = 0;
      for (const TraceStep& t : res.trace.steps) {
        nlohmann::json j;
        j["kind"] = t.kind;
        j["detail"] = t.detail;
        j["elements_before"] = t.elements_before;
        j["elements_after"] = t.elements_after;
        j["checks_passed"] = t.checks_passed;
        if (t.snapshot.size() > 0) j["lattice"] = lattice_to_json(t.snapshot);
        char name[64];
        snprintf(name, sizeof name, "/step_%02d", step++);
        std::ofstream f(o.trace_dir + name + ".json");
        f << j.dump(2) << "\n";
        if (t.snapshot.size() > 0) {
          std::ofstream g(o.trace_dir + name + ".dot");
          g << lattice_to_dot(t.snapshot);
        }
      }
      if (res.lattice) {
        std::ofstream f(o.trace_dir + "/result.dot");
        f << lattice_to_dot(res.lattice->lattice);
      }
    }
    if (res.obstruction) {
      nlohmann::json j;
      j["obstruction"] = {{"dual_atoms", res.obstruction->dual_atom_count},
                          {"antichain", res.obstruction->labels}};
      j["report"] = report_to_json(res.certificate);
      out << j.dump(2) << "\n";
      return 2;
    }
    nlohmann::json j;
    j["lattice"] = lattice_to_json(res.lattice->lattice);
    j["report"] = report_to_json(res.certificate);
    {  // the congruence realizing each input element
      nlohmann::json zeta = nlohmann::json::array();
      const AnchoredLattice& al = *res.lattice;
      for (int q = 0; q < al.represented.size(); ++q) {
        auto [x, y] = al.zeta_pair[q];
        nlohmann::json e;
        e["element"] = al.represented.label(q);
        e["congruence"] =
            congruence_to_json(al.lattice, principal_congruence(al.lattice, x, y).part);
        zeta.push_back(std::move(e));
      }
      j["zeta"] = std::move(zeta);
    }
    {
      nlohmann::json steps = nlohmann::json::array();
      for (const TraceStep& t : res.trace.steps)
        steps.push_back({{"kind", t.kind},
                         {"detail", t.detail},
                         {"elements_after", t.elements_after}});
      j["trace"] = std::move(steps);
    }
    write_text(o.output, j.dump(2) + "\n", out);
    if (o.dot) out << lattice_to_dot(res.lattice->lattice);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  try {
    Lattice l = lattice_from_json(load_json_file(o.lattice_input));
    nlohmann::json dj = load_json_file(o.d_input);
    DistributiveLattice d = dj.contains("relations")
                                ? DistributiveLattice::from_poset(poset_from_json(dj))
                                : DistributiveLattice::from_lattice(lattice_from_json(dj));
    VerificationReport rep = is_minimal_representation(l, d);
    if (auto ob = antichain_obstruction(d))
      rep.add("obstruction-three-or-more-maximal", false,
              std::to_string(ob->dual_atom_count) +
                  " maximal join-irreducibles; no lattice can pass");
    out << report_to_text(rep);
    out << report_to_json(rep).dump(2) << "\n";
    return rep.pass ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  try {
    std::string want_sig;
    if (!o.represents.empty())
      want_sig = canonical_signature(poset_from_json(load_json_file(o.represents)));
    EnumerationOptions opts;
    opts.max_n = o.max_n;
    opts.jobs = o.jobs;
    long shown = 0;
    enumerate_lattices(opts, [&](const EnumerationRecord& r) {
      if (o.only_minimal && !r.minimal_representation) return;
      if (!want_sig.empty() && r.ji_con_signature != want_sig) return;
      out << "n=" << r.elements << " sig=" << r.canonical << " |Princ|=" << r.princ_count
          << " |Min|=" << r.min_count << " minimal=" << (r.minimal_representation ? 1 : 0)
          << " con=" << r.ji_con_signature << "\n";
      ++shown;
    });
    out << "# " << shown << " lattice(s)\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_export(const ExportOptions& o, std::ostream& out, std::ostream& err) {
  try {
    Lattice l = lattice_from_json(load_json_file(o.input));
    if (o.format == "dot") {
      write_text(o.output, lattice_to_dot(l), out);
    } else if (o.format == "json") {
      write_text(o.output, lattice_to_json(l).dump(2) + "\n", out);
    } else {
      throw MalformedInput("unknown format \"" + o.format + "\" (use dot or json)");
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace latrep

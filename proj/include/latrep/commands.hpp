#pragma once

#include <iostream>
#include <string>

#include "latrep/poset.hpp"

namespace latrep {

// shared command implementations; the binary is a thin wrapper.
// exit codes: 0 success, 1 operational error, 2 mathematical negative
// (obstruction for synthesize, failed certificate for verify).

struct SynthesizeOptions {
  std::string input;       // poset or lattice JSON ("-" = stdin)
  std::string output;      // lattice JSON path; empty = stdout
  std::string trace_dir;   // per-step JSON/DOT dumps when nonempty
  bool dot = false;        // also print DOT of the result
};
int cmd_synthesize(const SynthesizeOptions& o, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string lattice_input;
  std::string d_input;     // distributive lattice (covers) or poset (relations)
};
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);

struct EnumerateOptions {
  int max_n = 9;
  int jobs = 1;
  bool only_minimal = false;
  std::string represents;  // poset JSON path: keep lattices with Ji(Con L) iso to it
};
int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err);

struct ExportOptions {
  std::string input;
  std::string format = "dot";  // dot | json
  std::string output;          // empty = stdout
};
int cmd_export(const ExportOptions& o, std::ostream& out, std::ostream& err);

}  // namespace latrep

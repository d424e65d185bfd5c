#pragma once

#include <functional>
#include <string>
#include <vector>

#include "latrep/lattice.hpp"

namespace latrep {

struct EnumerationRecord {
  int elements = 0;
  std::string canonical;          // canonical signature of the lattice order
  std::string ji_con_signature;   // canonical signature of Ji(Con L); identifies Con L
  int princ_count = 0;
  int min_count = 0;
  bool minimal_representation = false;
  Lattice lattice;                // a representative of the class
};

struct EnumerationOptions {
  int max_n = 9;
  int hard_bound = 10;  // requests beyond this are refused
  int jobs = 1;
};

// all lattices up to isomorphism, by element count then canonical signature;
// deterministic across runs and job counts
void enumerate_lattices(const EnumerationOptions& opts,
                        const std::function<void(const EnumerationRecord&)>& sink);

std::vector<long> lattice_counts(int max_n, int jobs = 1);

}  // namespace latrep

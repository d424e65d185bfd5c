#pragma once

#include <array>
#include <optional>
#include <string>

#include "latrep/congruence.hpp"
#include "latrep/lattice.hpp"

namespace latrep {

// one-point extension: K+ adjoins a relative complement u of c in [a,b]
struct ExtensionSite {
  Lattice k;
  int a, c, b;
  Lattice kplus;  // k's indices preserved, u appended last
  int u;
};
ExtensionSite make_extension_site(const Lattice& k, int a, int c, int b);

struct Admissibility {
  bool admissible;
  std::array<bool, 4> holds;   // conditions evaluated independently
  int first_failed;            // 1..4, or 0 when admissible
};
Admissibility is_admissible(const ExtensionSite& site, const Congruence& alpha);

// the extension of alpha to K+ when admissible (validated two ways), else absent
std::optional<Congruence> extend_congruence(const ExtensionSite& site, const Congruence& alpha);

// restriction to K of the congruence generated by alpha in K+, with the
// matched closed-form case; the two computations are required to agree
enum class RestrictionCase { kIdentity, kJoinLowerStep, kJoinUpperStep, kJoinWholeInterval };
struct GeneratedRestriction {
  Congruence value;  // on K
  RestrictionCase which;
};
GeneratedRestriction generated_restriction(const ExtensionSite& site, const Congruence& alpha);

// the double-cover shape: a -< c, c' -< b with c, c' the only covers between
struct DoubledSite {
  ExtensionSite site;
  int cprime;
};
DoubledSite make_doubled_site(const Lattice& k, int a, int c, int b);

enum class InadmissibleBranch { kLowerStepInside, kUpperStepInside };
struct Dichotomy {
  InadmissibleBranch branch;
  Congruence restricted;  // restriction of the generated congruence, on K
};
Dichotomy inadmissible_dichotomy(const DoubledSite& ds, const Congruence& alpha);

enum class ComparisonCondition { kNone, kDirect, kLowerToUpper, kUpperToLower };
struct BridgeComparison {
  bool holds;  // con_{K+}(x0,y0) <= con_{K+}(x1,y1)
  ComparisonCondition matched;
};
BridgeComparison bridge_comparison(const DoubledSite& ds, int x0, int y0, int x1, int y1);

// tab check: u doubly irreducible inside a covering multidiamond [a,b]; for
// every congruence of K = L - {u}, its generated extension restricts back
// either exactly or joined with con_K(a,b), depending on whether (a,b) collapses
struct TabReport {
  int congruences_checked = 0;
  int lifted_exactly = 0;   // a !~ b branch
  int joined_with_ab = 0;   // a ~ b branch
};
TabReport tab_restriction(const Lattice& l, int u, int a, int b);

}  // namespace latrep

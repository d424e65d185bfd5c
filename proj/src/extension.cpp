#include "latrep/extension.hpp"

#include <algorithm>

#include "latrep/errors.hpp"

namespace latrep {

namespace {

Congruence restrict_to_k(const ExtensionSite& site, const Partition& on_kplus) {
  int n = site.k.size();
  std::vector<int> reps(n);
  std::vector<int> first(n + 1, -1);
  for (int x = 0; x < n; ++x) {
    int r = on_kplus.rep(x);
    if (first[r] < 0) first[r] = x;
    reps[x] = first[r];
  }
  Congruence out{Partition::from_reps(std::move(reps)), site.k.hash()};
  LATREP_CHECK(is_congruence(site.k, out.part), "restriction to K is not a congruence");
  return out;
}

}  // namespace

ExtensionSite make_extension_site(const Lattice& k, int a, int c, int b) {
  ExtensionSite s;
  s.k = k;
  s.a = a;
  s.c = c;
  s.b = b;
  std::string lbl = "u";
  while (k.index_of_label(lbl) >= 0) lbl += "+";
  s.kplus = adjoin_relative_complement(k, a, c, b, lbl);
  s.u = k.size();
  return s;
}

Admissibility is_admissible(const ExtensionSite& site, const Congruence& alpha) {
  const Lattice& k = site.k;
  if (alpha.home != k.hash()) throw HomeMismatch("congruence not on the base lattice");
  const Partition& p = alpha.part;
  int a = site.a, c = site.c, b = site.b;
  Admissibility r{};
  r.holds = {true, true, true, true};
  for (int x : k.upper_covers(a))
    if (p.same(x, a) && !p.same(c, a)) r.holds[0] = false;
  if (k.upper_covers(a).size() > 1 && p.same(c, b) && !p.same(a, b)) r.holds[1] = false;
  for (int x : k.lower_covers(b))
    if (p.same(x, b) && !p.same(c, b)) r.holds[2] = false;
  if (k.lower_covers(b).size() > 1 && p.same(a, c) && !p.same(a, b)) r.holds[3] = false;
  r.first_failed = 0;
  for (int i = 0; i < 4; ++i)
    if (!r.holds[i]) {
      r.first_failed = i + 1;
      break;
    }
  r.admissible = r.first_failed == 0;
  return r;
}

std::optional<Congruence> extend_congruence(const ExtensionSite& site, const Congruence& alpha) {
  if (!is_admissible(site, alpha).admissible) return std::nullopt;
  const Partition& p = alpha.part;
  int n = site.k.size();
  std::vector<int> reps(n + 1);
  for (int x = 0; x < n; ++x) reps[x] = p.rep(x);
  if (p.same(site.a, site.c))
    reps[site.u] = p.rep(site.b);  // u joins the class of b
  else if (p.same(site.c, site.b))
    reps[site.u] = p.rep(site.a);  // u joins the class of a
  else
    reps[site.u] = site.u;  // singleton
  Congruence out{Partition::from_reps(std::move(reps)), site.kplus.hash()};
  LATREP_CHECK(technical_check(site.kplus, out.part), "extension fails the cover criterion");
  LATREP_CHECK(is_congruence(site.kplus, out.part), "extension is not a congruence");
  LATREP_CHECK(restrict_to_k(site, out.part).part == alpha.part,
               "extension does not restrict to the input");
  return out;
}

GeneratedRestriction generated_restriction(const ExtensionSite& site, const Congruence& alpha) {
  const Lattice& k = site.k;
  if (alpha.home != k.hash()) throw HomeMismatch("congruence not on the base lattice");
  // generic value: close alpha's pairs in K+ and restrict back
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < k.size(); ++x)
    if (alpha.part.rep(x) != x) pairs.emplace_back(alpha.part.rep(x), x);
  Partition gen = congruence_closure(site.kplus, pairs);
  Congruence generic = restrict_to_k(site, gen);

  Admissibility adm = is_admissible(site, alpha);
  auto join_with = [&](int x, int y) {
    Congruence step = principal_congruence(k, x, y);
    return congruence_join(k, alpha, step);
  };
  GeneratedRestriction out;
  bool only_first_fails = !adm.holds[0] && adm.holds[1] && adm.holds[2] && adm.holds[3];
  bool only_third_fails = adm.holds[0] && adm.holds[1] && !adm.holds[2] && adm.holds[3];
  if (adm.admissible) {
    out.which = RestrictionCase::kIdentity;
    out.value = Congruence{alpha.part, k.hash()};
  } else if (irreducibility(k, site.b).join_irreducible && only_first_fails) {
    out.which = RestrictionCase::kJoinLowerStep;
    out.value = join_with(site.a, site.c);
  } else if (irreducibility(k, site.a).meet_irreducible && only_third_fails) {
    out.which = RestrictionCase::kJoinUpperStep;
    out.value = join_with(site.b, site.c);
  } else {
    out.which = RestrictionCase::kJoinWholeInterval;
    out.value = join_with(site.a, site.b);
  }
  LATREP_CHECK(out.value.part == generic.part,
               "closed-form restriction disagrees with the generic computation");
  return out;
}

DoubledSite make_doubled_site(const Lattice& k, int a, int c, int b) {
  auto ups = k.upper_covers(a);
  auto downs = k.lower_covers(b);
  if (ups.size() != 2 || downs.size() != 2)
    throw ShapeViolation("need exactly two covers between the endpoints");
  std::sort(ups.begin(), ups.end());
  std::sort(downs.begin(), downs.end());
  if (ups != downs) throw ShapeViolation("covers of the endpoints do not match");
  if (std::find(ups.begin(), ups.end(), c) == ups.end())
    throw ShapeViolation("c is not one of the two middle elements");
  DoubledSite d;
  d.site = make_extension_site(k, a, c, b);
  d.cprime = ups[0] == c ? ups[1] : ups[0];
  return d;
}

Dichotomy inadmissible_dichotomy(const DoubledSite& ds, const Congruence& alpha) {
  const ExtensionSite& site = ds.site;
  const Lattice& k = site.k;
  Admissibility adm = is_admissible(site, alpha);
  if (adm.admissible) throw AdmissibleInput("the dichotomy needs a non-admissible congruence");
  Dichotomy out;
  Congruence lower = principal_congruence(k, site.a, site.c);
  Congruence upper = principal_congruence(k, site.b, site.c);
  if (lower.part.refines(alpha.part)) {
    out.branch = InadmissibleBranch::kLowerStepInside;
    out.restricted = congruence_join(k, alpha, upper);
  } else {
    LATREP_CHECK(upper.part.refines(alpha.part), "neither step lies inside the congruence");
    out.branch = InadmissibleBranch::kUpperStepInside;
    out.restricted = congruence_join(k, alpha, lower);
  }
  LATREP_CHECK(out.restricted.part == generated_restriction(site, alpha).value.part,
               "dichotomy value disagrees with the generic restriction");
  return out;
}

BridgeComparison bridge_comparison(const DoubledSite& ds, int x0, int y0, int x1, int y1) {
  const ExtensionSite& site = ds.site;
  const Lattice& k = site.k;
  if (!k.covers_pair(x0, y0)) throw ShapeViolation("first pair must be a cover");
  if (!k.lt(x1, y1)) throw ShapeViolation("second pair must be strictly ordered");

  Partition c00 = principal_congruence(k, x0, y0).part;
  Partition c11 = principal_congruence(k, x1, y1).part;
  Partition lo = principal_congruence(k, site.a, site.c).part;
  Partition hi = principal_congruence(k, site.b, site.c).part;

  BridgeComparison out;
  out.matched = ComparisonCondition::kNone;
  if (c00.refines(c11))
    out.matched = ComparisonCondition::kDirect;
  else if (c00.refines(lo) && hi.refines(c11))
    out.matched = ComparisonCondition::kLowerToUpper;
  else if (c00.refines(hi) && lo.refines(c11))
    out.matched = ComparisonCondition::kUpperToLower;
  out.holds = out.matched != ComparisonCondition::kNone;

  bool direct = principal_congruence(site.kplus, x0, y0)
                    .part.refines(principal_congruence(site.kplus, x1, y1).part);
  LATREP_CHECK(out.holds == direct,
               "three-condition criterion disagrees with the direct computation");
  return out;
}

TabReport tab_restriction(const Lattice& l, int u, int a, int b) {
  if (!l.lt(a, b)) throw NotAMultidiamondTab("endpoints are not ordered");
  std::vector<int> interior;
  for (int x = 0; x < l.size(); ++x)
    if (l.lt(a, x) && l.lt(x, b)) interior.push_back(x);
  for (int x : interior)
    if (!(l.covers_pair(a, x) && l.covers_pair(x, b)))
      throw NotAMultidiamondTab("interval is not a covering multidiamond");
  if ((int)interior.size() < 3)
    throw NotAMultidiamondTab("multidiamond needs at least three atoms");
  if (std::find(interior.begin(), interior.end(), u) == interior.end())
    throw NotAMultidiamondTab("u is not an atom of the multidiamond");
  if (l.upper_covers(u).size() != 1 || l.lower_covers(u).size() != 1)
    throw NotAMultidiamondTab("u is not doubly irreducible");

  std::vector<int> kelems;
  for (int x = 0; x < l.size(); ++x)
    if (x != u) kelems.push_back(x);
  if (!is_sublattice_set(l, kelems)) throw NotAMultidiamondTab("L - {u} is not a sublattice");
  Lattice k = sublattice(l, kelems);
  // k's indices: x for x < u, x-1 for x > u
  auto to_l = [&](int x) { return x < u ? x : x + 1; };
  auto to_k = [&](int x) { return x < u ? x : x - 1; };
  int ka = to_k(a), kb = to_k(b);

  TabReport rep;
  Partition con_ab_k = principal_congruence(k, ka, kb).part;
  for (const Partition& alpha : all_congruences(k)) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < k.size(); ++x)
      if (alpha.rep(x) != x) pairs.emplace_back(to_l(alpha.rep(x)), to_l(x));
    Partition beta = congruence_closure(l, pairs);
    // restrict back
    std::vector<int> reps(k.size());
    std::vector<int> first(l.size(), -1);
    for (int x = 0; x < k.size(); ++x) {
      int r = beta.rep(to_l(x));
      if (first[r] < 0) first[r] = x;
      reps[x] = first[r];
    }
    Partition back = Partition::from_reps(std::move(reps));
    ++rep.congruences_checked;
    if (!beta.same(a, b)) {
      LATREP_CHECK(back == alpha, "tab: restriction differs although the interval separates");
      ++rep.lifted_exactly;
    } else {
      LATREP_CHECK(back == partition_join(alpha, con_ab_k),
                   "tab: restriction is not the join with the interval step");
      ++rep.joined_with_ab;
    }
  }
  return rep;
}

}  // namespace latrep

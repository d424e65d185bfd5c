#include "latrep/surgery.hpp"

#include <algorithm>
#include <set>

#include "latrep/errors.hpp"

namespace latrep {

namespace {

void check_convex(const Poset& p, const std::vector<int>& a) {
  if (a.empty()) throw EmptySubset("fusion needs a nonempty subset");
  std::set<int> in(a.begin(), a.end());
  for (int x : a)
    for (int z : a)
      for (int y = 0; y < p.size(); ++y)
        if (!in.count(y) && p.lt(x, y) && p.lt(y, z))
          throw NotConvex(p.label(y) + " lies between fused elements " + p.label(x) + " and " +
                          p.label(z));
}

bool is_downset(const Poset& p, const std::set<int>& s) {
  for (int x : s)
    for (int y : p.strict_down(x).members())
      if (!s.count(y)) return false;
  return true;
}

}  // namespace

FusionResult fuse(const Poset& p, const std::vector<int>& a) {
  check_convex(p, a);
  std::set<int> in(a.begin(), a.end());
  int n = p.size();
  FusionResult r;
  r.psi.assign(n, -1);
  std::vector<int> keep;
  for (int x = 0; x < n; ++x)
    if (!in.count(x)) {
      r.psi[x] = (int)keep.size();
      keep.push_back(x);
    }
  r.iota = (int)keep.size();
  for (int x : a) r.psi[x] = r.iota;
  int m = r.iota + 1;

  // the declared strict order; it must come out antisymmetric and transitive
  // on its own, which from_strict re-validates
  std::vector<Bits> lt(m, Bits(m));
  auto below_some_a = [&](int x) {
    for (int v : a)
      if (p.lt(x, v)) return true;
    return false;
  };
  auto above_some_a = [&](int x) {
    for (int v : a)
      if (p.lt(v, x)) return true;
    return false;
  };
  for (int i = 0; i < (int)keep.size(); ++i) {
    int x = keep[i];
    if (above_some_a(x)) lt[r.iota].set(i);
    if (below_some_a(x)) lt[i].set(r.iota);
    for (int j = 0; j < (int)keep.size(); ++j) {
      int y = keep[j];
      if (p.lt(x, y) || (below_some_a(x) && above_some_a(y))) lt[i].set(j);
    }
  }
  std::vector<std::string> labels;
  for (int x : keep) labels.push_back(p.label(x));
  std::string iota_label = "iota";
  while (std::find(labels.begin(), labels.end(), iota_label) != labels.end()) iota_label += "'";
  labels.push_back(iota_label);
  r.fused = Poset::from_strict(m, lt, std::move(labels));  // re-validates the order axioms

  // psi is isotone and surjective
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.lt(x, y))
        LATREP_CHECK(r.psi[x] == r.psi[y] || r.fused.lt(r.psi[x], r.psi[y]), "psi not isotone");
  return r;
}

std::vector<int> fuse_factor(const Poset& p, const std::vector<int>& a, const Poset& q,
                             const std::vector<int>& phi) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.lt(x, y) && !(phi[x] == phi[y] || q.lt(phi[x], phi[y])))
        throw NotIsotone("phi(" + p.label(x) + ") !<= phi(" + p.label(y) + ")");
  for (size_t i = 1; i < a.size(); ++i)
    if (phi[a[i]] != phi[a[0]]) throw NotConstantOnA("phi not constant on the fused set");

  FusionResult f = fuse(p, a);
  std::vector<int> out(f.fused.size(), -1);
  for (int x = 0; x < p.size(); ++x) out[f.psi[x]] = phi[x];
  for (int i = 0; i < f.fused.size(); ++i)
    for (int j = 0; j < f.fused.size(); ++j)
      if (f.fused.lt(i, j))
        LATREP_CHECK(out[i] == out[j] || q.lt(out[i], out[j]), "factored map not isotone");
  for (int x = 0; x < p.size(); ++x)
    LATREP_CHECK(out[f.psi[x]] == phi[x], "factorization identity fails");
  return out;
}

std::variant<IsoMap, FuseIsoFailure> fuse_iso_check(const Poset& p, const std::vector<int>& a,
                                                    const Poset& q, const std::vector<int>& phi) {
  {
    std::vector<char> hit(q.size(), 0);
    for (int v : phi) hit[v] = 1;
    for (char h : hit)
      LATREP_CHECK(h, "phi is not surjective");
  }
  std::vector<int> fac = fuse_factor(p, a, q, phi);  // validates isotone + constant on A
  // hypothesis: x !<= y with phi(x) <= phi(y) needs bridging elements in A
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) || !q.leq(phi[x], phi[y])) continue;
      bool up = false, down = false;
      for (int v : a) {
        up = up || p.leq(x, v);
        down = down || p.leq(v, y);
      }
      if (!(up && down)) return FuseIsoFailure{x, y};
    }
  FusionResult f = fuse(p, a);
  IsoMap m;
  m.forward = fac;
  m.inverse.assign(q.size(), -1);
  for (int i = 0; i < f.fused.size(); ++i) {
    LATREP_CHECK(m.inverse[fac[i]] < 0, "factored map not injective");
    m.inverse[fac[i]] = i;
  }
  LATREP_CHECK(verify_isomorphism(f.fused, q, m), "factored map is not an order isomorphism");
  return m;
}

SplitResult split(const Poset& p, int a, const std::vector<int>& p0,
                  const std::vector<int>& p1) {
  std::set<int> s0(p0.begin(), p0.end()), s1(p1.begin(), p1.end());
  if (!is_downset(p, s0) || !is_downset(p, s1))
    throw NotDownsets("P0 and P1 must be downsets");
  {
    std::set<int> all = s0;
    all.insert(s1.begin(), s1.end());
    if ((int)all.size() != p.size()) throw NotDownsets("P0 and P1 must cover P");
  }
  if (std::includes(s0.begin(), s0.end(), s1.begin(), s1.end()) ||
      std::includes(s1.begin(), s1.end(), s0.begin(), s0.end()))
    throw ContainmentViolated("neither side may contain the other");
  if (!s0.count(a) || !s1.count(a))
    throw NotMaximalInIntersection(p.label(a) + " is not in the intersection");
  for (int x = 0; x < p.size(); ++x)
    if (s0.count(x) && s1.count(x) && p.lt(a, x))
      throw NotMaximalInIntersection(p.label(a) + " is not maximal in the intersection");

  int n = p.size();
  SplitResult r;
  std::vector<int> keep;  // split index -> P index for the untouched part
  std::vector<int> fwd(n, -1);
  for (int x = 0; x < n; ++x)
    if (x != a) {
      fwd[x] = (int)keep.size();
      keep.push_back(x);
    }
  r.a0 = (int)keep.size();
  r.a1 = r.a0 + 1;
  int m = r.a1 + 1;

  std::vector<Bits> lt(m, Bits(m));
  for (int x = 0; x < n; ++x) {
    if (x == a) continue;
    for (int y = 0; y < n; ++y)
      if (y != a && p.lt(x, y)) lt[fwd[x]].set(fwd[y]);
    if (p.lt(x, a)) {
      lt[fwd[x]].set(r.a0);
      lt[fwd[x]].set(r.a1);
    }
    if (p.lt(a, x)) {
      if (s0.count(x)) lt[r.a0].set(fwd[x]);
      if (s1.count(x)) lt[r.a1].set(fwd[x]);
    }
  }
  std::vector<std::string> labels;
  for (int x : keep) labels.push_back(p.label(x));
  labels.push_back(p.label(a) + "0");
  labels.push_back(p.label(a) + "1");
  r.split = Poset::from_strict(m, lt, std::move(labels));
  LATREP_CHECK(!r.split.leq(r.a0, r.a1) && !r.split.leq(r.a1, r.a0), "copies must be incomparable");

  r.eta.assign(m, -1);
  for (int i = 0; i < (int)keep.size(); ++i) r.eta[i] = keep[i];
  r.eta[r.a0] = a;
  r.eta[r.a1] = a;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (r.split.lt(i, j))
        LATREP_CHECK(r.eta[i] == r.eta[j] || p.lt(r.eta[i], r.eta[j]), "eta not isotone");

  for (int x : p0) r.side0.push_back(x == a ? r.a0 : fwd[x]);
  for (int x : p1) r.side1.push_back(x == a ? r.a1 : fwd[x]);
  return r;
}

IsoMap split_fuse_roundtrip(const Poset& p, int a, const std::vector<int>& p0,
                            const std::vector<int>& p1) {
  SplitResult s = split(p, a, p0, p1);
  auto res = fuse_iso_check(s.split, {s.a0, s.a1}, p, s.eta);
  LATREP_CHECK(std::holds_alternative<IsoMap>(res),
               "split/fuse round trip is not an isomorphism");
  return std::get<IsoMap>(res);
}

}  // namespace latrep

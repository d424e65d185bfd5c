#include "latrep/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latrep/distributive.hpp"
#include "latrep/errors.hpp"
#include "latrep/surgery.hpp"
#include "latrep/verify.hpp"

namespace latrep {

namespace {

std::string prime_label(const std::string& s) {
  // a(x) -> a'(x); o -> o'
  auto pos = s.find('(');
  if (pos == std::string::npos) return s + "'";
  return s.substr(0, pos) + "'" + s.substr(pos);
}

void fail_on(const VerificationReport& rep, const char* what, bool nine) {
  if (rep.pass) return;
  for (const auto& it : rep.items)
    if (!it.pass) {
      std::string msg = std::string(what) + ": " + it.id +
                        (it.witness.empty() ? "" : " [" + it.witness + "]");
      if (nine) throw NineStatementViolation(it.id, msg);
      throw FrameContractViolated(it.id, msg);
    }
}

}  // namespace

AnchoredLattice frame(const Poset& p) {
  LATREP_CHECK(p.size() >= 0, "bad poset");
  int np = p.size();
  int n = 2 + 2 * np;
  std::vector<std::string> labels(n);
  labels[0] = "o";
  labels[n - 1] = "i";
  std::vector<std::pair<int, int>> rel;
  for (int q = 0; q < np; ++q) {
    int a = 1 + 2 * q, b = 2 + 2 * q;
    labels[a] = "a(" + p.label(q) + ")";
    labels[b] = "b(" + p.label(q) + ")";
    rel.emplace_back(0, a);
    rel.emplace_back(a, b);
    rel.emplace_back(b, n - 1);
  }
  if (np == 0) rel.emplace_back(0, 1);
  AnchoredLattice al;
  al.lattice = Lattice::from_poset(Poset::from_relations(n, rel, std::move(labels)));
  al.represented = p;
  al.o = 0;
  al.i = n - 1;
  al.side.assign(np, 0);
  al.base_label = p.labels();
  auto mx = maximal_elements(p);
  int p0 = mx.size() == 1 ? mx[0] : -1;
  for (int q = 0; q < np; ++q) {
    if (q == p0)
      al.zeta_pair.emplace_back(al.o, al.i);
    else
      al.zeta_pair.emplace_back(1 + 2 * q, 2 + 2 * q);
  }
  return al;
}

AnchoredLattice framew(const Poset& p) {
  LATREP_CHECK(p.size() >= 1, "frame needs a nonempty poset");
  auto mx = maximal_elements(p);
  if (mx.size() != 1)
    throw HypothesisViolated("one-sided frame needs a unique maximal element");
  int p0 = mx[0];

  AnchoredLattice al;
  al.represented = p;
  al.side.assign(p.size(), 0);
  al.base_label = p.labels();

  if (p.size() == 1) {
    // the generic frame cannot certify a one-element poset; the two-element
    // chain satisfies every statement of the contract
    al.lattice = Lattice::from_poset(Poset::from_relations(2, {{0, 1}}, {"o", "i"}));
    al.o = 0;
    al.i = 1;
    al.zeta_pair.emplace_back(0, 1);
    fail_on(check_frame_properties(al), "frame contract", false);
    return al;
  }

  int np = p.size();
  // o, i, two spokes, the chains; gadget elements appended pair by pair
  std::vector<std::string> labels = {"o", "i", "v1", "v2"};
  std::vector<std::pair<int, int>> rel = {{0, 2}, {2, 1}, {0, 3}, {3, 1}};
  std::vector<int> a(np), b(np);
  for (int q = 0; q < np; ++q) {
    a[q] = (int)labels.size();
    labels.push_back("a(" + p.label(q) + ")");
    b[q] = (int)labels.size();
    labels.push_back("b(" + p.label(q) + ")");
    rel.emplace_back(0, a[q]);
    rel.emplace_back(a[q], b[q]);
    rel.emplace_back(b[q], 1);
  }
  auto rebuild = [&] {
    return Lattice::from_poset(Poset::from_relations((int)labels.size(), rel, labels));
  };
  al.lattice = rebuild();  // frame plus spokes is a lattice

  for (int lo = 0; lo < np; ++lo)
    for (int hi = 0; hi < np; ++hi) {
      if (!p.lt(lo, hi)) continue;
      std::string suffix = "(" + p.label(lo) + "," + p.label(hi) + ")";
      int k = -1, h = -1;
      if (hi != p0) {
        int e = (int)labels.size();
        labels.push_back("e" + suffix);
        k = (int)labels.size();
        labels.push_back("k" + suffix);
        h = (int)labels.size();
        labels.push_back("h" + suffix);
        rel.emplace_back(0, e);
        rel.emplace_back(e, k);
        rel.emplace_back(e, a[hi]);
      } else {
        k = (int)labels.size();
        labels.push_back("k" + suffix);
        h = (int)labels.size();
        labels.push_back("h" + suffix);
        rel.emplace_back(0, k);
      }
      rel.emplace_back(k, a[lo]);
      rel.emplace_back(k, h);
      rel.emplace_back(h, b[lo]);
      rel.emplace_back(h, b[hi]);
      al.lattice = rebuild();  // each insertion must again be a lattice
    }
  al.o = 0;
  al.i = 1;
  for (int q = 0; q < np; ++q) {
    if (q == p0)
      al.zeta_pair.emplace_back(al.o, al.i);
    else
      al.zeta_pair.emplace_back(a[q], b[q]);
  }
  fail_on(check_frame_properties(al), "frame contract", false);
  return al;
}

AnchoredLattice base(const Poset& p, int p0, int p1, ConstructionTrace* trace) {
  if (p0 == p1 || p.strict_up(p0).any() || p.strict_up(p1).any())
    throw HypothesisViolated("need two distinct maximal elements");
  {
    Bits covered = p.strict_down(p0);
    covered.set(p0);
    covered |= p.strict_down(p1);
    covered.set(p1);
    if (covered.count() != p.size())
      throw HypothesisViolated("the two cones do not cover the poset");
  }
  Poset P0 = p.induced(downset_of(p, p0));
  Poset P1 = p.induced(downset_of(p, p1));

  AnchoredLattice L0 = framew(P0);
  AnchoredLattice L1 = framew(P1);
  if (trace) {
    trace->steps.push_back({"frame", "lower cone of " + p.label(p0), 0,
                            L0.lattice.size(), L0.lattice.hash(), true, L0.lattice});
    trace->steps.push_back({"frame", "upper cone of " + p.label(p1), 0,
                            L1.lattice.size(), L1.lattice.hash(), true, L1.lattice});
  }

  Lattice L1d = dual(L1.lattice);
  {
    std::vector<std::string> relabeled;
    for (int x = 0; x < L1d.size(); ++x) relabeled.push_back(prime_label(L1d.label(x)));
    L1d = Lattice::from_poset(L1d.order().relabeled(std::move(relabeled)));
  }
  GluedSum g = glued_sum(L0.lattice, L1d);

  AnchoredLattice al;
  al.lattice = g.lattice;
  al.represented = free_union(P0, P1);
  al.o = al.lattice.index_of_label("o");
  al.i = g.embed_lower[L0.i];
  al.oprime = al.lattice.index_of_label("o'");
  LATREP_CHECK(al.o >= 0 && al.i >= 0 && al.oprime >= 0, "bounds missing after gluing");

  int n0 = P0.size();
  for (int q = 0; q < al.represented.size(); ++q) {
    bool lower = q < n0;
    al.side.push_back(lower ? 0 : 1);
    al.base_label.push_back(lower ? P0.label(q) : P1.label(q - n0));
  }
  int q0 = -1, q1 = -1;
  for (int q = 0; q < al.represented.size(); ++q) {
    if (al.side[q] == 0 && al.base_label[q] == p.label(p0)) q0 = q;
    if (al.side[q] == 1 && al.base_label[q] == p.label(p1)) q1 = q;
  }
  LATREP_CHECK(q0 >= 0 && q1 >= 0, "maximal elements missing from the free union");
  for (int q = 0; q < al.represented.size(); ++q) {
    if (q == q0) {
      al.zeta_pair.emplace_back(al.o, al.i);
    } else if (q == q1) {
      al.zeta_pair.emplace_back(al.i, al.oprime);
    } else if (al.side[q] == 0) {
      al.zeta_pair.emplace_back(al.lower_anchor(q, "a"), al.lower_anchor(q, "b"));
    } else {
      al.zeta_pair.emplace_back(al.upper_anchor(q, "b"), al.upper_anchor(q, "a"));
    }
    LATREP_CHECK(al.zeta_pair.back().first >= 0 && al.zeta_pair.back().second >= 0,
                 "anchor missing for " + al.base_label[q]);
  }
  fail_on(check_nine_statements(al, q0, q1), "base contract", true);
  if (trace)
    trace->steps.push_back({"glue", "glued sum of the two cones", L0.lattice.size(),
                            al.lattice.size(), al.lattice.hash(), true, al.lattice});
  return al;
}

namespace {

// the five adjunctions between [a,b] and [b',a']; returns the extended lattice
Lattice attach_bridge_elements(const Lattice& k, int a, int b, int i, int bp, int ap,
                               const std::string& r) {
  Lattice cur = k;
  int t = cur.size();
  cur = adjoin_relative_complement(cur, b, i, bp, "t(" + r + ")");
  int u = cur.size();
  cur = adjoin_relative_complement(cur, a, b, t, "u(" + r + ")");
  cur = adjoin_relative_complement(cur, t, bp, ap, "u'(" + r + ")");
  int uprime = u + 1;
  int s = cur.size();
  cur = adjoin_relative_complement(cur, u, t, uprime, "s(" + r + ")");
  cur = adjoin_relative_complement(cur, u, s, uprime, "m(" + r + ")");
  return cur;
}

}  // namespace

AnchoredLattice bridge_gadget(const std::string& r) {
  std::vector<std::string> labels = {"a(" + r + ")", "b(" + r + ")", "i", "b'(" + r + ")",
                                     "a'(" + r + ")"};
  Lattice spine = Lattice::from_poset(
      Poset::from_relations(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, std::move(labels)));
  Lattice full = attach_bridge_elements(spine, 0, 1, 2, 3, 4, r);
  LATREP_CHECK(full.size() == 10, "bridge gadget must have ten elements");
  LATREP_CHECK(full.covers().size() == 14, "bridge gadget must have fourteen covers");

  AnchoredLattice al;
  al.lattice = full;
  // the spine congruences after identification: a three-element antichain
  al.represented = Poset::from_relations(3, {}, {r, "lo", "hi"});
  al.side = {0, 0, 0};
  al.base_label = al.represented.labels();
  al.o = 0;
  al.i = 2;
  al.zeta_pair = {{0, 1}, {1, 2}, {2, 3}};
  return al;
}

AnchoredLattice attach_bridge(const AnchoredLattice& k, const std::string& r_label,
                              BridgeInstance* capture) {
  const Poset& q = k.represented;
  int ql = -1, qu = -1;
  for (int x = 0; x < q.size(); ++x) {
    if (k.base_label[x] == r_label && k.side[x] == 0) ql = x;
    if (k.base_label[x] == r_label && k.side[x] == 1) qu = x;
  }
  if (ql < 0 || qu < 0)
    throw HypothesisViolated("no twin copies of " + r_label + " to bridge");

  int a = k.lower_anchor(ql, "a"), b = k.lower_anchor(ql, "b");
  int bp = k.upper_anchor(qu, "b"), ap = k.upper_anchor(qu, "a");
  int i = k.i;
  if (a < 0 || b < 0 || bp < 0 || ap < 0)
    throw HypothesisViolated("anchors for " + r_label + " missing");
  const Lattice& kl = k.lattice;
  if (!(kl.covers_pair(a, b) && kl.covers_pair(b, i) && kl.covers_pair(i, bp) &&
        kl.covers_pair(bp, ap)))
    throw HypothesisViolated("anchor spine is not a cover chain");
  if (!irreducibility(kl, a).meet_irreducible || !irreducibility(kl, b).meet_irreducible)
    throw HypothesisViolated("lower anchors must be meet-irreducible");
  if (!irreducibility(kl, ap).join_irreducible || !irreducibility(kl, bp).join_irreducible)
    throw HypothesisViolated("upper anchors must be join-irreducible");

  Lattice l = attach_bridge_elements(kl, a, b, i, bp, ap, r_label);
  VerificationReport bridge_rep = check_bridge_theorem(kl, l, a, b, i, bp, ap);
  if (!bridge_rep.pass) {
    for (const auto& it : bridge_rep.items)
      if (!it.pass) throw CertificateFailed("bridge statements: " + it.id + " [" + it.witness + "]");
  }
  if (capture) *capture = BridgeInstance{kl, l, a, b, i, bp, ap, r_label};

  FusionResult f = fuse(q, {ql, qu});
  Poset fused = f.fused;
  {
    auto labels = fused.labels();
    labels[f.iota] = q.label(ql);
    fused = fused.relabeled(std::move(labels));
  }
  AnchoredLattice out;
  out.lattice = l;
  out.represented = fused;
  out.o = k.o;
  out.i = k.i;
  out.oprime = k.oprime;
  out.zeta_pair.assign(fused.size(), {-1, -1});
  out.side.assign(fused.size(), -1);
  out.base_label.assign(fused.size(), "");
  for (int x = 0; x < q.size(); ++x) {
    int y = f.psi[x];
    if (y == f.iota) continue;
    out.zeta_pair[y] = k.zeta_pair[x];
    out.side[y] = k.side[x];
    out.base_label[y] = k.base_label[x];
  }
  out.zeta_pair[f.iota] = {a, b};
  out.side[f.iota] = 2;
  out.base_label[f.iota] = r_label;

  ConStructure cs = con_structure(l);
  LATREP_CHECK(cs.mask(a, b) == cs.mask(bp, ap),
               "bridge failed to identify the two anchor congruences");
  return out;
}

SynthesisResult minimal_representation(const Poset& p, bool collect_bridges) {
  SynthesisResult out;
  out.certificate.claim = "minimal-representation-synthesis";
  out.certificate.instance = "|P| = " + std::to_string(p.size());
  DistributiveLattice d = DistributiveLattice::from_poset(p);

  if (auto ob = antichain_obstruction(d)) {
    out.obstruction = *ob;
    out.certificate.add("obstruction-three-or-more-maximal", true,
                        std::to_string(ob->dual_atom_count) + " maximal join-irreducibles");
    out.trace.steps.push_back({"obstruction", "maximal antichain joins to the top", p.size(),
                               p.size(), 0, true, Lattice()});
    return out;
  }

  AnchoredLattice al;
  if (p.size() == 0) {
    al.lattice = Lattice::from_poset(Poset::from_relations(1, {}, {"o"}));
    al.represented = p;
    al.o = al.i = 0;
    out.trace.steps.push_back({"trivial", "empty poset", 0, 1, al.lattice.hash(), true,
                               al.lattice});
  } else {
    auto mx = maximal_elements(p);
    if (mx.size() == 1) {
      al = framew(p);
      out.trace.steps.push_back({"frame", "one maximal element", 0, al.lattice.size(),
                                 al.lattice.hash(), true, al.lattice});
    } else {
      int p0 = mx[0], p1 = mx[1];
      al = base(p, p0, p1, &out.trace);
      // intersection of the cones, bridged minimal-first
      std::vector<int> shared;
      for (int x = 0; x < p.size(); ++x)
        if (p.lt(x, p0) && p.lt(x, p1)) shared.push_back(x);
      if (!shared.empty()) {
        Poset sub = p.induced(shared);
        for (int k : linear_extension(sub, true)) {
          int r = shared[k];
          BridgeInstance inst;
          int before = al.lattice.size();
          {  // spine conditions must hold before the attachment
            int a = -1, b = -1, bp = -1, ap = -1;
            for (int x = 0; x < al.represented.size(); ++x) {
              if (al.base_label[x] == p.label(r) && al.side[x] == 0) {
                a = al.lower_anchor(x, "a");
                b = al.lower_anchor(x, "b");
              }
              if (al.base_label[x] == p.label(r) && al.side[x] == 1) {
                bp = al.upper_anchor(x, "b");
                ap = al.upper_anchor(x, "a");
              }
            }
            LATREP_CHECK(a >= 0 && b >= 0 && bp >= 0 && ap >= 0, "bridge anchors missing");
            VerificationReport pre = check_tmin(al.lattice, a, b, al.i, bp, ap);
            if (!pre.pass) throw CertificateFailed("spine conditions fail before bridging " +
                                                   p.label(r));
          }
          al = attach_bridge(al, p.label(r), collect_bridges ? &inst : nullptr);
          if (collect_bridges) out.bridges.push_back(inst);
          // re-check the nine statements against the fused poset
          int q0 = -1, q1 = -1;
          for (int x = 0; x < al.represented.size(); ++x) {
            if (al.base_label[x] == p.label(p0) && al.side[x] == 0) q0 = x;
            if (al.base_label[x] == p.label(p1) && al.side[x] == 1) q1 = x;
          }
          VerificationReport nine = check_nine_statements(al, q0, q1);
          if (!nine.pass) throw CertificateFailed("nine statements fail after bridging " +
                                                  p.label(r));
          out.trace.steps.push_back({"bridge", "bridged " + p.label(r), before,
                                     al.lattice.size(), al.lattice.hash(), true, al.lattice});
        }
      }
    }
  }

  VerificationReport rep = is_minimal_representation(al.lattice, d);
  auto iso = find_isomorphism(al.represented, p);
  rep.add("represented-poset-matches-input", iso.has_value());
  if (!rep.pass) {
    for (const auto& it : rep.items)
      if (!it.pass) throw CertificateFailed("certificate: " + it.id + " [" + it.witness + "]");
  }
  out.certificate.absorb(rep);
  out.certificate.instance += ", |L| = " + std::to_string(al.lattice.size());
  out.lattice = std::move(al);
  return out;
}

}  // namespace latrep

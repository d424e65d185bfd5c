#include "latrep/lattice.hpp"

#include <algorithm>
#include <set>

#include "latrep/errors.hpp"

namespace latrep {

namespace {

uint64_t cover_hash(const std::vector<std::pair<int, int>>& covers, int n) {
  uint64_t h = 0xcbf29ce484222325ull ^ (uint64_t)n;
  for (auto [a, b] : covers) {
    h = (h ^ (uint64_t)(a * 131 + b)) * 0x100000001b3ull;
  }
  return h;
}

}  // namespace

Lattice Lattice::from_poset(const Poset& p) {
  int n = p.size();
  LATREP_CHECK(n >= 1, "empty carrier");
  Lattice l;
  l.order_ = p;
  l.join_.assign(n * n, -1);
  l.meet_.assign(n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      // least upper bound
      int lub = -1;
      Bits ub = p.strict_up(x);
      ub.set(x);
      ub &= [&] {
        Bits t = p.strict_up(y);
        t.set(y);
        return t;
      }();
      for (int z : ub.members()) {
        bool least = true;
        for (int w : ub.members())
          if (!p.leq(z, w)) {
            least = false;
            break;
          }
        if (least) {
          lub = z;
          break;
        }
      }
      if (lub < 0) throw NotALattice(x, y, true, "no join for " + p.label(x) + "," + p.label(y));
      Bits lb = p.strict_down(x);
      lb.set(x);
      lb &= [&] {
        Bits t = p.strict_down(y);
        t.set(y);
        return t;
      }();
      int glb = -1;
      for (int z : lb.members()) {
        bool greatest = true;
        for (int w : lb.members())
          if (!p.leq(w, z)) {
            greatest = false;
            break;
          }
        if (greatest) {
          glb = z;
          break;
        }
      }
      if (glb < 0) throw NotALattice(x, y, false, "no meet for " + p.label(x) + "," + p.label(y));
      l.join_[x * n + y] = l.join_[y * n + x] = lub;
      l.meet_[x * n + y] = l.meet_[y * n + x] = glb;
    }
  for (int x = 0; x < n; ++x) {
    if (!p.strict_down(x).any()) l.bottom_ = x;
    if (!p.strict_up(x).any()) l.top_ = x;
  }
  LATREP_CHECK(l.bottom_ >= 0 && l.top_ >= 0, "missing bound");
  // tables agree with the order
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool le = p.leq(x, y);
      LATREP_CHECK((l.join(x, y) == y) == le, "join table disagrees with order");
      LATREP_CHECK((l.meet(x, y) == x) == le, "meet table disagrees with order");
    }
  l.covers_ = p.cover_pairs();
  l.hash_ = cover_hash(l.covers_, n);
  return l;
}

Lattice dual(const Lattice& l) {
  return Lattice::from_poset(l.order().dual());
}

GluedSum glued_sum(const Lattice& l0, const Lattice& l1) {
  LATREP_CHECK(l0.size() >= 1 && l1.size() >= 1, "glued sum needs nonempty parts");
  int n0 = l0.size(), n1 = l1.size();
  int n = n0 + n1 - 1;
  std::vector<int> e0(n0), e1(n1);
  for (int i = 0; i < n0; ++i) e0[i] = i;
  // bottom of l1 maps onto top of l0, everything else is appended
  int next = n0;
  for (int i = 0; i < n1; ++i) e1[i] = (i == l1.bottom()) ? l0.top() : next++;

  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      if (l0.lt(x, y)) rel.emplace_back(e0[x], e0[y]);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y)
      if (l1.lt(x, y)) rel.emplace_back(e1[x], e1[y]);
  for (int x = 0; x < n0; ++x)
    if (x != l0.top()) rel.emplace_back(x, e1[l1.top()]);

  std::vector<std::string> labels(n);
  std::set<std::string> used;
  for (int i = 0; i < n0; ++i) {
    labels[i] = l0.label(i);
    used.insert(labels[i]);
  }
  for (int i = 0; i < n1; ++i) {
    if (i == l1.bottom()) continue;
    std::string s = l1.label(i);
    while (used.count(s)) s += "'";
    labels[e1[i]] = s;
    used.insert(s);
  }
  GluedSum g;
  g.lattice = Lattice::from_poset(Poset::from_relations(n, rel, std::move(labels)));
  g.embed_lower = std::move(e0);
  g.embed_upper = std::move(e1);
  return g;
}

Lattice adjoin_relative_complement(const Lattice& k, int a, int c, int b,
                                   const std::string& u_label) {
  if (!(k.covers_pair(a, c) && k.covers_pair(c, b)))
    throw NotACoverChain("need a -< c -< b, got " + k.label(a) + "," + k.label(c) + "," +
                         k.label(b));
  int n = k.size();
  int u = n;
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (k.lt(x, y)) rel.emplace_back(x, y);
  for (int x = 0; x < n; ++x) {
    if (k.leq(x, a)) rel.emplace_back(x, u);
    if (k.leq(b, x)) rel.emplace_back(u, x);
  }
  std::vector<std::string> labels = k.order().labels();
  labels.push_back(u_label);
  Lattice out = Lattice::from_poset(Poset::from_relations(n + 1, rel, std::move(labels)));
  // the defining equations and the case formulas must hold
  LATREP_CHECK(out.meet(u, c) == a && out.join(u, c) == b, "u is not a relative complement of c");
  for (int x = 0; x < n; ++x) {
    LATREP_CHECK(out.join(u, x) == (k.leq(x, a) ? u : out.join(b, x)), "join case formula fails");
    LATREP_CHECK(out.meet(u, x) == (k.leq(b, x) ? u : out.meet(a, x)), "meet case formula fails");
  }
  return out;
}

Irreducibility irreducibility(const Lattice& l, int x) {
  Irreducibility r;
  r.meet_irreducible = l.upper_covers(x).size() == 1;
  r.join_irreducible = l.lower_covers(x).size() == 1;
  return r;
}

int length(const Lattice& l) { return l.order().height(l.top()); }

std::vector<int> join_irreducible_elements(const Lattice& l) {
  std::vector<int> out;
  for (int x = 0; x < l.size(); ++x)
    if (l.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

bool is_sublattice_set(const Lattice& l, const std::vector<int>& elems) {
  std::vector<char> in(l.size(), 0);
  for (int x : elems) in[x] = 1;
  for (int x : elems)
    for (int y : elems)
      if (!in[l.join(x, y)] || !in[l.meet(x, y)]) return false;
  return true;
}

Lattice sublattice(const Lattice& l, const std::vector<int>& elems) {
  if (!is_sublattice_set(l, elems))
    throw NotASublattice("element set not closed under join/meet");
  return Lattice::from_poset(l.order().induced(elems));
}

}  // namespace latrep

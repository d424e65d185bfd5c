#include "latrep/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "latrep/distributive.hpp"
#include "latrep/errors.hpp"

namespace latrep {

Partition Partition::discrete(int n) {
  Partition p;
  p.rep_.resize(n);
  std::iota(p.rep_.begin(), p.rep_.end(), 0);
  return p;
}

Partition Partition::full(int n) {
  Partition p;
  p.rep_.assign(n, 0);
  return p;
}

Partition Partition::from_reps(std::vector<int> reps) {
  int n = (int)reps.size();
  // canonicalize: tag every block by its least element
  std::vector<int> least(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = reps[x];
    if (least[r] < 0 || x < least[r]) least[r] = x;
  }
  Partition p;
  p.rep_.resize(n);
  for (int x = 0; x < n; ++x) p.rep_[x] = least[reps[x]];
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> reps(n, -1);
  for (const auto& b : blocks) {
    LATREP_CHECK(!b.empty(), "empty block");
    int m = *std::min_element(b.begin(), b.end());
    for (int x : b) {
      LATREP_CHECK(x >= 0 && x < n && reps[x] < 0, "blocks do not partition the set");
      reps[x] = m;
    }
  }
  for (int x = 0; x < n; ++x) LATREP_CHECK(reps[x] >= 0, "element missing from blocks");
  return from_reps(std::move(reps));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::map<int, std::vector<int>> by;
  for (int x = 0; x < size(); ++x) by[rep_[x]].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [r, b] : by) out.push_back(std::move(b));
  return out;
}

std::vector<int> Partition::block_of(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (rep_[y] == rep_[x]) out.push_back(y);
  return out;
}

int Partition::block_count() const {
  std::set<int> s(rep_.begin(), rep_.end());
  return (int)s.size();
}

bool Partition::refines(const Partition& o) const {
  for (int x = 0; x < size(); ++x)
    if (!o.same(x, rep_[x])) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    up[y] = x;
    return true;
  }
};

}  // namespace

Partition partition_join(const Partition& a, const Partition& b) {
  int n = a.size();
  LATREP_CHECK(n == b.size(), "partition size mismatch");
  UnionFind uf(n);
  for (int x = 0; x < n; ++x) {
    uf.unite(x, a.rep(x));
    uf.unite(x, b.rep(x));
  }
  std::vector<int> reps(n);
  for (int x = 0; x < n; ++x) reps[x] = uf.find(x);
  return Partition::from_reps(std::move(reps));
}

Partition congruence_closure(const Lattice& l, const std::vector<std::pair<int, int>>& pairs,
                             const Partition* base) {
  int n = l.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  auto unite = [&](int x, int y) {
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  if (base)
    for (int x = 0; x < n; ++x) unite(x, base->rep(x));
  for (auto [a, b] : pairs) unite(a, b);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int z = 0; z < n; ++z) {
      unite(l.join(a, z), l.join(b, z));
      unite(l.meet(a, z), l.meet(b, z));
    }
  }
  std::vector<int> reps(n);
  for (int x = 0; x < n; ++x) reps[x] = uf.find(x);
  return Partition::from_reps(std::move(reps));
}

Congruence principal_congruence(const Lattice& l, int a, int b) {
  return Congruence{congruence_closure(l, {{a, b}}), l.hash()};
}

bool is_congruence(const Lattice& l, const Partition& p) {
  int n = l.size();
  LATREP_CHECK(p.size() == n, "partition size mismatch");
  for (int x = 0; x < n; ++x) {
    int r = p.rep(x);
    if (r == x) continue;
    for (int z = 0; z < n; ++z) {
      if (!p.same(l.join(x, z), l.join(r, z))) return false;
      if (!p.same(l.meet(x, z), l.meet(r, z))) return false;
    }
  }
  return true;
}

bool technical_check(const Lattice& l, const Partition& p) {
  // every block must be an interval
  for (const auto& b : p.blocks()) {
    int m = b[0], j = b[0];
    for (int x : b) {
      m = l.meet(m, x);
      j = l.join(j, x);
    }
    int count = 0;
    for (int z = 0; z < l.size(); ++z)
      if (l.leq(m, z) && l.leq(z, j)) ++count;
    if (count != (int)b.size() || !p.same(m, j))
      throw BlocksNotIntervals("block of " + l.label(b[0]) + " is not an interval");
  }
  // cover condition and its dual
  for (int x = 0; x < l.size(); ++x) {
    auto ups = l.upper_covers(x);
    for (int y : ups)
      for (int z : ups) {
        if (y == z) continue;
        if (p.same(x, y) && !p.same(z, l.join(y, z))) return false;
      }
    auto downs = l.lower_covers(x);
    for (int y : downs)
      for (int z : downs) {
        if (y == z) continue;
        if (p.same(x, y) && !p.same(z, l.meet(y, z))) return false;
      }
  }
  return true;
}

Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b) {
  if (a.home != l.hash() || b.home != l.hash())
    throw HomeMismatch("congruences live on different lattices");
  return Congruence{partition_join(a.part, b.part), l.hash()};
}

SublatticeRestriction restriction(const Lattice& l, const Congruence& a,
                                  const std::vector<int>& sublattice_elems) {
  if (a.home != l.hash()) throw HomeMismatch("congruence not on this lattice");
  if (!is_sublattice_set(l, sublattice_elems))
    throw NotASublattice("restriction target not closed under join/meet");
  SublatticeRestriction out;
  out.elems = sublattice_elems;
  out.sub = sublattice(l, sublattice_elems);
  int m = (int)sublattice_elems.size();
  std::vector<int> reps(m);
  std::map<int, int> first;  // l-block rep -> first sub index
  for (int i = 0; i < m; ++i) {
    int r = a.part.rep(sublattice_elems[i]);
    auto it = first.find(r);
    if (it == first.end()) {
      first[r] = i;
      reps[i] = i;
    } else {
      reps[i] = it->second;
    }
  }
  out.cong = Congruence{Partition::from_reps(std::move(reps)), out.sub.hash()};
  LATREP_CHECK(is_congruence(out.sub, out.cong.part), "restriction is not a congruence");
  return out;
}

const Bits& ConStructure::mask(int x, int y) const { return pair_mask[x * n + y]; }

Partition ConStructure::partition_of(const Bits& mask) const {
  Partition acc = Partition::discrete(n);
  for (int j : mask.members()) acc = partition_join(acc, ji[j]);
  return acc;
}

bool ConStructure::mask_is_join_irreducible(const Bits& mask) const {
  return ji_index_of(mask) >= 0;
}

int ConStructure::ji_index_of(const Bits& mask) const {
  for (size_t j = 0; j < ji_down.size(); ++j)
    if (ji_down[j] == mask) return (int)j;
  return -1;
}

ConStructure con_structure(const Lattice& l) {
  int n = l.size();
  ConStructure cs;
  cs.home = l.hash();
  cs.n = n;
  const auto& covers = l.covers();
  int m = (int)covers.size();

  std::vector<Partition> cover_con(m);
  for (int c = 0; c < m; ++c)
    cover_con[c] = congruence_closure(l, {covers[c]});

  // distinct cover congruences, deterministic order
  std::vector<Partition> distinct;
  for (const auto& p : cover_con)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
      distinct.push_back(p);
  std::sort(distinct.begin(), distinct.end(),
            [](const Partition& a, const Partition& b) {
              int ca = a.block_count(), cb = b.block_count();
              if (ca != cb) return ca > cb;  // finer first
              return a < b;
            });

  // join-irreducible = not the join of the strictly smaller distinct ones
  for (const auto& p : distinct) {
    Partition join_smaller = Partition::discrete(n);
    for (const auto& q : distinct)
      if (q != p && q.refines(p)) join_smaller = partition_join(join_smaller, q);
    if (join_smaller != p) cs.ji.push_back(p);
  }

  int k = (int)cs.ji.size();
  {
    std::vector<Bits> lt(k, Bits(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && cs.ji[i].refines(cs.ji[j])) lt[i].set(j);
    cs.ji_order = Poset::from_strict(k, lt, default_labels(k, "ji"));
  }
  cs.ji_down.assign(k, Bits(k));
  for (int j = 0; j < k; ++j) {
    cs.ji_down[j].set(j);
    for (int i = 0; i < k; ++i)
      if (cs.ji_order.lt(i, j)) cs.ji_down[j].set(i);
  }
  cs.zero_mask = Bits(k);
  cs.one_mask = Bits(k);
  for (int j = 0; j < k; ++j) cs.one_mask.set(j);

  std::vector<Bits> cover_mask(m, Bits(k));
  for (int c = 0; c < m; ++c)
    for (int j = 0; j < k; ++j)
      if (cs.ji[j].refines(cover_con[c])) cover_mask[c].set(j);

  std::map<std::pair<int, int>, int> cover_index;
  for (int c = 0; c < m; ++c) cover_index[covers[c]] = c;

  // con(x, y) for x < y along a fixed maximal chain, bottom-up by height
  cs.pair_mask.assign(n * n, Bits(k));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return l.order().height(a) < l.order().height(b); });
  for (int y : order) {
    for (int x = 0; x < n; ++x) {
      if (!l.lt(x, y)) continue;
      // deterministic intermediate: least-index z with x <= z -< y
      int z = -1;
      for (int cand = 0; cand < n && z < 0; ++cand)
        if (l.leq(x, cand) && l.covers_pair(cand, y)) z = cand;
      LATREP_CHECK(z >= 0, "no cover step inside interval");
      Bits mask = cs.pair_mask[x * n + z];
      mask |= cover_mask[cover_index[{z, y}]];
      cs.pair_mask[x * n + y] = mask;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || l.lt(x, y)) continue;
      int mt = l.meet(x, y), jn = l.join(x, y);
      cs.pair_mask[x * n + y] = cs.pair_mask[mt * n + jn];
    }
  return cs;
}

namespace {

std::vector<Bits> downset_masks(const Poset& p) {
  // all downsets, generated over a linear extension
  std::vector<Bits> out;
  std::set<std::vector<uint64_t>> seen;
  std::vector<Bits> frontier{Bits(p.size())};
  seen.insert(Bits(p.size()).words());
  out.push_back(Bits(p.size()));
  while (!frontier.empty()) {
    Bits d = frontier.back();
    frontier.pop_back();
    for (int x = 0; x < p.size(); ++x) {
      if (d.test(x)) continue;
      if (!p.strict_down(x).subset_of(d)) continue;
      Bits e = d;
      e.set(x);
      if (seen.insert(e.words()).second) {
        out.push_back(e);
        frontier.push_back(e);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Partition> all_congruences(const Lattice& l, const ConStructure& cs) {
  std::vector<Partition> out;
  for (const Bits& d : downset_masks(cs.ji_order)) {
    Partition p = Partition::discrete(l.size());
    for (int j : d.members()) p = partition_join(p, cs.ji[j]);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> all_congruences(const Lattice& l) {
  return all_congruences(l, con_structure(l));
}

std::vector<Congruence> principal_set(const Lattice& l) {
  ConStructure cs = con_structure(l);
  int n = l.size();
  std::set<Bits> masks;
  masks.insert(cs.zero_mask);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.lt(x, y)) masks.insert(cs.pair_mask[x * n + y]);
  std::vector<Congruence> out;
  for (const Bits& mk : masks) out.push_back(Congruence{cs.partition_of(mk), l.hash()});
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport is_minimal_representation(const Lattice& l, const DistributiveLattice& d) {
  VerificationReport rep;
  rep.claim = "minimal-representation";
  rep.instance = "lattice n=" + std::to_string(l.size()) +
                 " vs distributive n=" + std::to_string(d.lattice().size());
  ConStructure cs = con_structure(l);
  int n = l.size();

  Poset ji_d = d.ji_poset();
  auto iso = find_isomorphism(cs.ji_order, ji_d);
  std::string iso_witness;
  if (iso) {
    for (int i = 0; i < (int)iso->forward.size(); ++i)
      iso_witness += (i ? ", " : "") + std::to_string(i) + "->" + ji_d.label(iso->forward[i]);
  }
  rep.add("congruence-ji-poset-isomorphic", iso.has_value(),
          iso ? iso_witness
              : "Ji(Con L) has " + std::to_string(cs.ji.size()) + " members, Ji(D) has " +
                    std::to_string(ji_d.size()));

  std::set<Bits> principal{cs.zero_mask};
  std::map<std::vector<uint64_t>, std::pair<int, int>> sample_pair;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.lt(x, y)) {
        principal.insert(cs.pair_mask[x * n + y]);
        sample_pair.emplace(cs.pair_mask[x * n + y].words(), std::make_pair(x, y));
      }
  std::set<Bits> expected{cs.zero_mask, cs.one_mask};
  for (const Bits& dmask : cs.ji_down) expected.insert(dmask);

  bool equal = principal == expected;
  std::string witness;
  if (!equal) {
    for (const Bits& mk : principal)
      if (!expected.count(mk)) {
        auto [x, y] = sample_pair[mk.words()];
        witness += "principal con(" + l.label(x) + "," + l.label(y) +
                   ") is join-reducible (" + std::to_string(mk.count()) +
                   " join-irreducibles below); ";
      }
    for (const Bits& mk : expected)
      if (!principal.count(mk)) witness += "member of Min L not principal; ";
  }
  rep.add("principal-set-equals-min-set", equal, witness);
  return rep;
}

}  // namespace latrep

#include "latrep/distributive.hpp"

#include <algorithm>
#include <set>

#include "latrep/errors.hpp"

namespace latrep {

namespace {

std::string downset_label(const Poset& p, const Bits& d) {
  std::string s = "{";
  bool first = true;
  for (int x : d.members()) {
    if (!first) s += ",";
    s += p.label(x);
    first = false;
  }
  return s + "}";
}

}  // namespace

DistributiveLattice DistributiveLattice::from_poset(const Poset& p) {
  int np = p.size();
  std::set<std::vector<uint64_t>> seen;
  std::vector<Bits> downs;
  {
    std::vector<Bits> frontier{Bits(np)};
    seen.insert(Bits(np).words());
    downs.push_back(Bits(np));
    while (!frontier.empty()) {
      Bits d = frontier.back();
      frontier.pop_back();
      for (int x = 0; x < np; ++x) {
        if (d.test(x) || !p.strict_down(x).subset_of(d)) continue;
        Bits e = d;
        e.set(x);
        if (seen.insert(e.words()).second) {
          downs.push_back(e);
          frontier.push_back(e);
        }
      }
    }
  }
  std::sort(downs.begin(), downs.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.words() < b.words();
  });
  int n = (int)downs.size();
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && downs[i].subset_of(downs[j])) rel.emplace_back(i, j);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = downset_label(p, downs[i]);
  DistributiveLattice d;
  d.lat_ = Lattice::from_poset(Poset::from_relations(n, rel, std::move(labels)));
  d.gens_ = p;
  d.enc_ = std::move(downs);
  LATREP_CHECK(is_distributive(d.lat_), "downset lattice fails distributivity");
  // joins are unions, meets are intersections
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LATREP_CHECK(d.enc_[d.lat_.join(i, j)] == (d.enc_[i] | d.enc_[j]), "join is not union");
      LATREP_CHECK(d.enc_[d.lat_.meet(i, j)] == (d.enc_[i] & d.enc_[j]), "meet is not intersection");
    }
  return d;
}

DistributiveLattice DistributiveLattice::from_lattice(const Lattice& l) {
  LATREP_CHECK(is_distributive(l), "input lattice is not distributive");
  std::vector<int> ji = join_irreducible_elements(l);
  Poset q = l.order().induced(ji);
  DistributiveLattice rebuilt = from_poset(q);
  auto iso = find_isomorphism(l.order(), rebuilt.lattice().order());
  LATREP_CHECK(iso.has_value(), "lattice is not the downset lattice of its join-irreducibles");
  DistributiveLattice d;
  d.lat_ = l;
  d.gens_ = q;
  d.enc_.assign(l.size(), Bits(q.size()));
  for (int e = 0; e < l.size(); ++e)
    for (int k = 0; k < (int)ji.size(); ++k)
      if (l.leq(ji[k], e)) d.enc_[e].set(k);
  return d;
}

Poset DistributiveLattice::ji_poset() const {
  return lat_.order().induced(join_irreducible_elements(lat_));
}

std::vector<int> DistributiveLattice::ji_elements() const {
  return join_irreducible_elements(lat_);
}

bool is_distributive(const Lattice& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

std::vector<int> dual_atoms(const Lattice& l) { return l.lower_covers(l.top()); }

DualAtomCorrespondence corr_dual_atoms_maximal(const DistributiveLattice& d) {
  const Lattice& l = d.lattice();
  std::vector<int> ji = d.ji_elements();
  Poset jip = d.ji_poset();
  std::vector<int> max_ji;
  for (int k = 0; k < (int)ji.size(); ++k)
    if (!jip.strict_up(k).any()) max_ji.push_back(k);

  DualAtomCorrespondence out;
  for (int a : dual_atoms(l)) {
    int found = -1;
    for (int k = 0; k < (int)ji.size(); ++k)
      if (!l.leq(ji[k], a)) {
        LATREP_CHECK(found < 0, "dual atom excludes two join-irreducibles");
        found = k;
      }
    LATREP_CHECK(found >= 0, "dual atom above every join-irreducible");
    LATREP_CHECK(!jip.strict_up(found).any(), "excluded join-irreducible is not maximal");
    out.pairs.emplace_back(a, ji[found]);
  }
  // inverse direction: maximal p  ->  join of all the other join-irreducibles
  for (int k : max_ji) {
    int v = l.bottom();
    for (int j = 0; j < (int)ji.size(); ++j)
      if (j != k) v = l.join(v, ji[j]);
    LATREP_CHECK(l.covers_pair(v, l.top()), "join of the others is not a dual atom");
    bool matched = false;
    for (auto [a, p] : out.pairs)
      if (p == ji[k]) {
        LATREP_CHECK(a == v, "correspondence does not compose to the identity");
        matched = true;
      }
    LATREP_CHECK(matched, "maximal join-irreducible missing from correspondence");
  }
  LATREP_CHECK(out.pairs.size() == max_ji.size(), "correspondence is not a bijection");
  return out;
}

}  // namespace latrep

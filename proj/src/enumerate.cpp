#include "latrep/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "latrep/congruence.hpp"
#include "latrep/errors.hpp"

namespace latrep {

namespace {

// Lattices on n elements correspond to join-semilattices with top on n-1
// elements (delete the bottom; put it back and meets exist automatically).
// Every such semilattice arises from a smaller one by deleting a minimal
// element, so generation adds one new minimal element per step, attached to an
// upset U such that U ^ upset(x) keeps a minimum for every old x.

struct Jslt {
  Poset order;  // all binary joins exist and there is a top
};

std::vector<Bits> upsets_of(const Poset& p) {
  std::vector<Bits> out{Bits(p.size())};
  std::set<std::vector<uint64_t>> seen{Bits(p.size()).words()};
  std::vector<Bits> frontier{Bits(p.size())};
  while (!frontier.empty()) {
    Bits u = frontier.back();
    frontier.pop_back();
    for (int x = 0; x < p.size(); ++x) {
      if (u.test(x) || !p.strict_up(x).subset_of(u)) continue;
      Bits e = u;
      e.set(x);
      if (seen.insert(e.words()).second) {
        out.push_back(e);
        frontier.push_back(e);
      }
    }
  }
  return out;
}

bool valid_attachment(const Poset& p, const Bits& u) {
  if (!u.any()) return false;  // the new element must lie below the top
  for (int x = 0; x < p.size(); ++x) {
    if (u.test(x)) continue;
    // minimum of u ^ upset(x)
    Bits cand = u;
    cand &= [&] {
      Bits t = p.strict_up(x);
      t.set(x);
      return t;
    }();
    if (!cand.any()) return false;
    int min = -1;
    for (int z : cand.members()) {
      bool least = true;
      for (int w : cand.members())
        if (!p.leq(z, w)) {
          least = false;
          break;
        }
      if (least) {
        min = z;
        break;
      }
    }
    if (min < 0) return false;
  }
  return true;
}

Poset extend_with_minimal(const Poset& p, const Bits& u) {
  int n = p.size();
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.lt(x, y)) rel.emplace_back(x, y);
  for (int x : u.members()) rel.emplace_back(n, x);
  return Poset::from_relations(n + 1, rel);
}

std::vector<Poset> extensions_of(const Poset& p) {
  std::vector<Poset> out;
  for (const Bits& u : upsets_of(p))
    if (valid_attachment(p, u)) out.push_back(extend_with_minimal(p, u));
  return out;
}

Lattice lattice_from_jslt(const Poset& s) {
  int n = s.size();
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (s.lt(x, y)) rel.emplace_back(x + 1, y + 1);
    rel.emplace_back(0, x + 1);
  }
  return Lattice::from_poset(Poset::from_relations(n + 1, rel));
}

EnumerationRecord classify(Lattice l, std::string canonical) {
  EnumerationRecord rec;
  rec.elements = l.size();
  rec.canonical = std::move(canonical);
  ConStructure cs = con_structure(l);
  rec.ji_con_signature = canonical_signature(cs.ji_order);
  std::set<Bits> principal{cs.zero_mask};
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (l.lt(x, y)) principal.insert(cs.mask(x, y));
  std::set<Bits> expected{cs.zero_mask, cs.one_mask};
  for (const Bits& d : cs.ji_down) expected.insert(d);
  rec.princ_count = (int)principal.size();
  rec.min_count = (int)expected.size();
  rec.minimal_representation = principal == expected;
  rec.lattice = std::move(l);
  return rec;
}

}  // namespace

void enumerate_lattices(const EnumerationOptions& opts,
                        const std::function<void(const EnumerationRecord&)>& sink) {
  if (opts.max_n < 1 || opts.max_n > opts.hard_bound)
    throw Error("enumeration bound exceeded (max " + std::to_string(opts.hard_bound) + ")");
  int jobs = std::max(1, opts.jobs);

  {  // one-element lattice
    Lattice c1 = Lattice::from_poset(Poset::from_relations(1, {}));
    sink(classify(c1, canonical_signature(c1.order())));
  }
  // semilattice levels: level m holds join-semilattices-with-top on m elements
  std::map<std::string, Poset> level;
  {
    Poset one = Poset::from_relations(1, {});
    level.emplace(canonical_signature(one), one);
  }
  for (int n = 2; n <= opts.max_n; ++n) {
    // lattices on n elements from the current level (m = n - 1)
    for (const auto& [sig, s] : level) {
      Lattice l = lattice_from_jslt(s);
      sink(classify(l, canonical_signature(l.order())));
    }
    if (n == opts.max_n) break;

    // extend every member of the level by one new minimal element; each
    // worker owns a contiguous shard, results merge deterministically
    std::vector<const Poset*> parents;
    for (const auto& [sig, s] : level) parents.push_back(&s);
    std::vector<std::map<std::string, Poset>> partial(jobs);
    auto work = [&](int w) {
      for (size_t idx = w; idx < parents.size(); idx += jobs)
        for (Poset& q : extensions_of(*parents[idx])) {
          std::string sig = canonical_signature(q);
          partial[w].emplace(std::move(sig), std::move(q));
        }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    std::map<std::string, Poset> next;
    for (auto& part : partial)
      for (auto& [sig, q] : part) next.emplace(sig, std::move(q));
    level = std::move(next);
  }
}

std::vector<long> lattice_counts(int max_n, int jobs) {
  std::vector<long> counts(max_n + 1, 0);
  EnumerationOptions opts;
  opts.max_n = max_n;
  opts.jobs = jobs;
  enumerate_lattices(opts, [&](const EnumerationRecord& r) { ++counts[r.elements]; });
  return counts;
}

}  // namespace latrep

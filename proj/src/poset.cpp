#include "latrep/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "latrep/errors.hpp"

namespace latrep {

std::vector<std::string> default_labels(int n, const std::string& prefix) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
  return out;
}

void Poset::finish() {
  down_.assign(n_, Bits(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (up_[x].test(y)) down_[y].set(x);
  if ((int)labels_.size() != n_) labels_ = default_labels(n_);
  std::set<std::string> seen;
  for (auto& s : labels_)
    LATREP_CHECK(seen.insert(s).second, "duplicate element label '" + s + "'");
  // heights in topological order (fewer strict predecessors first)
  heights_.assign(n_, 0);
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  for (int x : order)
    for (int y : down_[x].members()) heights_[x] = std::max(heights_[x], heights_[y] + 1);
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& pairs,
                            std::vector<std::string> labels) {
  std::vector<Bits> up(n, Bits(n));
  for (auto [lo, hi] : pairs) {
    LATREP_CHECK(lo >= 0 && lo < n && hi >= 0 && hi < n, "relation index out of range");
    if (lo != hi) up[lo].set(hi);
  }
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (up[x].test(k)) up[x] |= up[k];
  for (int x = 0; x < n; ++x)
    if (up[x].test(x)) throw CycleDetected("relation cycle through element " + std::to_string(x));
  Poset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);
  p.finish();
  return p;
}

Poset Poset::from_strict(int n, const std::vector<Bits>& lt,
                         std::vector<std::string> labels) {
  for (int x = 0; x < n; ++x) {
    if (lt[x].test(x)) throw CycleDetected("irreflexivity fails at " + std::to_string(x));
    for (int y = 0; y < n; ++y)
      if (lt[x].test(y)) {
        if (lt[y].test(x)) throw CycleDetected("antisymmetry fails");
        LATREP_CHECK(lt[y].subset_of(lt[x]), "transitivity fails");
      }
  }
  Poset p;
  p.n_ = n;
  p.up_ = lt;
  p.labels_ = std::move(labels);
  p.finish();
  return p;
}

int Poset::index_of_label(const std::string& s) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == s) return i;
  return -1;
}

bool Poset::covers(int x, int y) const {
  return lt(x, y) && !(up_[x] & down_[y]).any();
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (covers(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<int> Poset::upper_covers(int x) const {
  std::vector<int> out;
  for (int y : up_[x].members())
    if (covers(x, y)) out.push_back(y);
  return out;
}

std::vector<int> Poset::lower_covers(int x) const {
  std::vector<int> out;
  for (int y : down_[x].members())
    if (covers(y, x)) out.push_back(y);
  return out;
}

Poset Poset::dual() const {
  Poset p;
  p.n_ = n_;
  p.up_ = down_;
  p.labels_ = labels_;
  p.finish();
  return p;
}

Poset Poset::induced(const std::vector<int>& elems) const {
  int m = (int)elems.size();
  std::vector<Bits> lt(m, Bits(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = labels_[elems[i]];
    for (int j = 0; j < m; ++j)
      if (this->lt(elems[i], elems[j])) lt[i].set(j);
  }
  return from_strict(m, lt, std::move(labels));
}

Poset Poset::relabeled(std::vector<std::string> labels) const {
  Poset p = *this;
  LATREP_CHECK((int)labels.size() == n_, "relabel size mismatch");
  p.labels_ = std::move(labels);
  std::set<std::string> seen;
  for (auto& s : p.labels_)
    LATREP_CHECK(seen.insert(s).second, "duplicate element label '" + s + "'");
  return p;
}

std::vector<int> maximal_elements(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if (!p.strict_up(x).any()) out.push_back(x);
  return out;
}

std::vector<int> minimal_elements(const Poset& p) {
  std::vector<int> out;
  for (int x = 0; x < p.size(); ++x)
    if (!p.strict_down(x).any()) out.push_back(x);
  return out;
}

std::vector<int> downset_of(const Poset& p, int x) {
  std::vector<int> out = p.strict_down(x).members();
  out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

Poset free_union(const Poset& a, const Poset& b) {
  int n = a.size() + b.size();
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.lt(x, y)) rel.emplace_back(x, y);
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      if (b.lt(x, y)) rel.emplace_back(a.size() + x, a.size() + y);
  std::vector<std::string> labels;
  std::set<std::string> used;
  for (int i = 0; i < a.size(); ++i) {
    labels.push_back(a.label(i));
    used.insert(a.label(i));
  }
  for (int i = 0; i < b.size(); ++i) {
    std::string s = b.label(i);
    while (used.count(s)) s += "'";
    labels.push_back(s);
    used.insert(s);
  }
  return Poset::from_relations(n, rel, std::move(labels));
}

namespace {

std::vector<uint64_t> refine_invariants(const Poset& p) {
  int n = p.size();
  std::vector<uint64_t> inv(n);
  for (int x = 0; x < n; ++x)
    inv[x] = (uint64_t)p.strict_down(x).count() * 1000003u +
             (uint64_t)p.strict_up(x).count() * 10007u + (uint64_t)p.height(x);
  for (int round = 0; round < n; ++round) {
    std::vector<uint64_t> next(n);
    for (int x = 0; x < n; ++x) {
      uint64_t h = inv[x] * 0x9e3779b97f4a7c15ull + 1;
      std::vector<uint64_t> lo, hi;
      for (int y : p.lower_covers(x)) lo.push_back(inv[y]);
      for (int y : p.upper_covers(x)) hi.push_back(inv[y]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      for (uint64_t v : lo) h = h * 0x100000001b3ull ^ (v + 0x517cc1b7);
      h ^= 0xabcdef12345ull;
      for (uint64_t v : hi) h = h * 0x100000001b3ull ^ (v + 0x9e3779b9);
      next[x] = h;
    }
    if (next == inv) break;
    inv = next;
  }
  return inv;
}

bool extend_iso(const Poset& a, const Poset& b, const std::vector<std::vector<int>>& cand,
                std::vector<int>& fwd, std::vector<int>& used, int x) {
  int n = a.size();
  if (x == n) return true;
  for (int y : cand[x]) {
    if (used[y]) continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      if (a.lt(x, z) != b.lt(y, fwd[z])) ok = false;
      if (a.lt(z, x) != b.lt(fwd[z], y)) ok = false;
    }
    if (!ok) continue;
    fwd[x] = y;
    used[y] = 1;
    if (extend_iso(a, b, cand, fwd, used, x + 1)) return true;
    used[y] = 0;
  }
  fwd[x] = -1;
  return false;
}

// cmp: 0 = cur equals best so far, -1 = cur already strictly smaller
void canon_search(const Poset& p, const std::vector<std::vector<int>>& classes,
                  std::vector<int>& perm, std::vector<int>& used, size_t ci, size_t pos,
                  std::vector<char>& best, std::vector<char>& cur, bool& have_best, int cmp) {
  if (ci == classes.size()) {
    if (!have_best || cmp < 0) {
      best = cur;
      have_best = true;
    }
    return;
  }
  const auto& cls = classes[ci];
  if (pos == cls.size()) {
    canon_search(p, classes, perm, used, ci + 1, 0, best, cur, have_best, cmp);
    return;
  }
  int slot = (int)perm.size();
  for (int x : cls) {
    if (used[x]) continue;
    size_t mark = cur.size();
    for (int s = 0; s < slot; ++s) {
      cur.push_back(p.lt(perm[s], x) ? 1 : 0);
      cur.push_back(p.lt(x, perm[s]) ? 1 : 0);
    }
    int ncmp = cmp;
    if (have_best && ncmp == 0) {
      for (size_t k = mark; k < cur.size(); ++k) {
        if (cur[k] != best[k]) {
          ncmp = cur[k] < best[k] ? -1 : 1;
          break;
        }
      }
    }
    if (ncmp <= 0) {
      perm.push_back(x);
      used[x] = 1;
      canon_search(p, classes, perm, used, ci, pos + 1, best, cur, have_best, ncmp);
      used[x] = 0;
      perm.pop_back();
    }
    cur.resize(mark);
  }
}

}  // namespace

std::optional<IsoMap> find_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  int n = a.size();
  auto ia = refine_invariants(a), ib = refine_invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (ia[x] == ib[y]) cand[x].push_back(y);
  std::vector<int> fwd(n, -1), used(n, 0);
  if (!extend_iso(a, b, cand, fwd, used, 0)) return std::nullopt;
  IsoMap m;
  m.forward = fwd;
  m.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) m.inverse[fwd[x]] = x;
  LATREP_CHECK(verify_isomorphism(a, b, m), "isomorphism re-check failed");
  return m;
}

bool verify_isomorphism(const Poset& a, const Poset& b, const IsoMap& f) {
  int n = a.size();
  if (n != b.size() || (int)f.forward.size() != n) return false;
  std::vector<int> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    int y = f.forward[x];
    if (y < 0 || y >= n || seen[y]++) return false;
    if (f.inverse[y] != x) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z)
      if (a.lt(x, z) != b.lt(f.forward[x], f.forward[z])) return false;
  return true;
}

std::vector<int> linear_extension(const Poset& p, bool minimal_first) {
  int n = p.size();
  std::vector<int> out;
  std::vector<char> taken(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int x = 0; x < n && pick < 0; ++x) {
      if (taken[x]) continue;
      bool free = true;
      for (int y = 0; y < n; ++y) {
        if (taken[y]) continue;
        if (minimal_first ? p.lt(y, x) : p.lt(x, y)) {
          free = false;
          break;
        }
      }
      if (free) pick = x;
    }
    taken[pick] = 1;
    out.push_back(pick);
  }
  if (!minimal_first) std::reverse(out.begin(), out.end());
  return out;
}

std::string canonical_signature(const Poset& p) {
  int n = p.size();
  auto inv = refine_invariants(p);
  std::map<uint64_t, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[inv[x]].push_back(x);
  std::vector<std::vector<int>> classes;
  for (auto& [k, v] : groups) classes.push_back(v);
  std::stable_sort(classes.begin(), classes.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) {
                     auto key = [&](int x) {
                       return std::tuple(p.height(x), p.strict_down(x).count(),
                                         p.strict_up(x).count(), inv[x]);
                     };
                     if (a.size() != b.size()) return a.size() < b.size();
                     return key(a[0]) < key(b[0]);
                   });
  std::vector<int> perm, used(n, 0);
  std::vector<char> best, cur;
  bool have_best = false;
  canon_search(p, classes, perm, used, 0, 0, best, cur, have_best, 0);
  std::string out = std::to_string(n) + ":";
  for (size_t i = 0; i < best.size(); i += 4) {
    int v = 0;
    for (size_t j = i; j < std::min(best.size(), i + 4); ++j) v = v * 2 + best[j];
    out += "0123456789abcdef"[v];
  }
  return out;
}

}  // namespace latrep

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace latrep {

// fixed-width dynamic bitset, sized at construction
class Bits {
 public:
  Bits() : n_(0) {}
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  Bits& operator|=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  bool operator==(const Bits& o) const { return w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }
  bool operator<(const Bits& o) const { return w_ < o.w_; }

  bool subset_of(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }
  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

}  // namespace latrep

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fgv {

/// Fixed-size bitset sized at runtime.  Configurations here stay small
/// (a few hundred points), so a word vector is plenty.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k)
      c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  bool operator==(const Bitset& o) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace fgv

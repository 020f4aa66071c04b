#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace regind::detail {

// Fixed-width vertex set for the exact solvers. W words hold 64*W vertices.
template <int W> struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto x : w)
      if (x)
        return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto x : w)
      c += std::popcount(x);
    return c;
  }

  int first() const {
    for (int i = 0; i < W; ++i)
      if (w[i])
        return i * 64 + std::countr_zero(w[i]);
    return -1;
  }

  Bits &operator&=(const Bits &o) {
    for (int i = 0; i < W; ++i)
      w[i] &= o.w[i];
    return *this;
  }
  Bits &operator|=(const Bits &o) {
    for (int i = 0; i < W; ++i)
      w[i] |= o.w[i];
    return *this;
  }
  Bits &remove(const Bits &o) {
    for (int i = 0; i < W; ++i)
      w[i] &= ~o.w[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits &b) { return a &= b; }

  int count_and(const Bits &o) const {
    int c = 0;
    for (int i = 0; i < W; ++i)
      c += std::popcount(w[i] & o.w[i]);
    return c;
  }

  template <class F> void for_each(F &&f) const {
    for (int i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

} // namespace regind::detail

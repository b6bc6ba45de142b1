#pragma once

// Fixed-capacity bitset over vertex indices. Two 64-bit words, enough for
// every instance family this lab works with (n <= 128 is enforced at
// hypergraph construction). Value type, cheap to copy, hashable so it can
// key the solver's transposition table.

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace hdg {

class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;

  static VertexSet single(int v) {
    VertexSet s;
    s.add(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet full(int n) {
    assert(n >= 0 && n <= kCapacity);
    VertexSet s;
    for (int v = 0; v < n; ++v) s.add(v);
    return s;
  }

  void add(int v) {
    assert(v >= 0 && v < kCapacity);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void remove(int v) {
    assert(v >= 0 && v < kCapacity);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  bool contains(int v) const {
    if (v < 0 || v >= kCapacity) return false;
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }

  bool subset_of(const VertexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  bool intersects(const VertexSet& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    r.w_[0] = w_[0] | o.w_[0];
    r.w_[1] = w_[1] | o.w_[1];
    return r;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    r.w_[0] = w_[0] & o.w_[0];
    r.w_[1] = w_[1] & o.w_[1];
    return r;
  }

  // set difference
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r;
    r.w_[0] = w_[0] & ~o.w_[0];
    r.w_[1] = w_[1] & ~o.w_[1];
    return r;
  }

  VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }

  bool operator==(const VertexSet&) const = default;

  // smallest element, or -1 when empty
  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // smallest element strictly greater than v, or -1
  int next_after(int v) const {
    int from = v + 1;
    if (from < 64) {
      std::uint64_t m = w_[0] & (~std::uint64_t{0} << from);
      if (m) return std::countr_zero(m);
      from = 64;
    }
    std::uint64_t m = w_[1] & (from >= 128 ? 0 : ~std::uint64_t{0} << (from - 64));
    if (m) return 64 + std::countr_zero(m);
    return -1;
  }

  class iterator {
   public:
    iterator(const VertexSet* s, int pos) : s_(s), pos_(pos) {}
    int operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = s_->next_after(pos_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    const VertexSet* s_;
    int pos_;
  };

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::uint64_t hash() const {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return mix(w_[0]) ^ (mix(w_[1] + 0x165667b19e3779f9ULL) << 1);
  }

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace hdg

template <>
struct std::hash<hdg::VertexSet> {
  std::size_t operator()(const hdg::VertexSet& s) const noexcept {
    return static_cast<std::size_t>(s.hash());
  }
};

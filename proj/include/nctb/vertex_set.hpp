#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace nctb {

using Vertex = int;

/// Fixed-universe bitset over vertex ids 0..universe-1.
///
/// Ordering is lexicographic on the sorted member lists, so {0,1} < {0,2} < {1}
/// and a proper prefix sorts first ({0} < {0,1}).
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(int universe, const std::vector<Vertex> &members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool subset_of(const VertexSet &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  VertexSet &operator|=(const VertexSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet &operator&=(const VertexSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator-=(const VertexSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet &operator^=(const VertexSet &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet &b) { return a ^= b; }

  /// Smallest member, or -1 when empty.
  Vertex first() const { return next(0); }
  /// Smallest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from >= universe_) return -1;
    std::size_t w = static_cast<std::size_t>(from) >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
      if (++w == words_.size()) return -1;
      bits = words_[w];
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  template <typename F> void for_each(F &&f) const {
    for (Vertex v = first(); v >= 0; v = next(v + 1)) f(v);
  }

  const std::vector<std::uint64_t> &words() const { return words_; }

  friend bool operator==(const VertexSet &a, const VertexSet &b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const VertexSet &a, const VertexSet &b);

  std::string to_string() const;

private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet &s) const noexcept {
    std::size_t h = std::hash<int>{}(s.universe());
    for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

} // namespace nctb

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace centlat {

using Element = std::uint32_t;

// Fixed-universe bitset over element indices 0..universe-1. Iteration is in
// ascending index order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet of(std::size_t universe, std::span<const Element> members) {
    ElementSet s(universe);
    for (Element e : members) s.insert(e);
    return s;
  }
  static ElementSet of(std::size_t universe, std::initializer_list<Element> members) {
    ElementSet s(universe);
    for (Element e : members) s.insert(e);
    return s;
  }
  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
  }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member; universe() when empty.
  Element min() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return static_cast<Element>(universe_);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  // Canonical order: by size, then lexicographically on the ascending member
  // list. For equal sizes the set owning the lowest differing bit is smaller.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    const std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) return (a.words_[i] & (diff & (~diff + 1))) != 0;
    }
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace centlat

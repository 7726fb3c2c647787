#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "roughq/group.hpp"

namespace roughq {

/// A subset of one group's elements, stored as a fixed 256-bit vector.
///
/// Sets remember the group they belong to; combining sets from different
/// groups throws ParentMismatch. The parent must outlive the set.
class ElementSet {
 public:
  static constexpr int kWords = 4;
  static_assert(kWords * 64 >= kMaxOrder);

  explicit ElementSet(const FiniteGroup& parent) noexcept : parent_(&parent) {}
  ElementSet(const FiniteGroup& parent, std::initializer_list<Element> members) : parent_(&parent) {
    for (Element e : members) insert(e);
  }
  template <typename Range>
  static ElementSet of(const FiniteGroup& parent, const Range& members) {
    ElementSet s(parent);
    for (Element e : members) s.insert(static_cast<Element>(e));
    return s;
  }
  static ElementSet full(const FiniteGroup& parent) noexcept {
    ElementSet s(parent);
    for (Element e = 0; e < parent.order(); ++e) s.insert(e);
    return s;
  }
  static ElementSet identity(const FiniteGroup& parent) noexcept { return ElementSet(parent, {kIdentity}); }

  const FiniteGroup& parent() const noexcept { return *parent_; }

  bool contains(Element e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  int size() const noexcept {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Members in ascending index order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      auto bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  /// Smallest member, or -1 when empty.
  Element first() const noexcept {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
    return -1;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_parent(other);
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    check_parent(other);
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  ElementSet operator|(const ElementSet& o) const { return combine(o, [](auto a, auto b) { return a | b; }); }
  ElementSet operator&(const ElementSet& o) const { return combine(o, [](auto a, auto b) { return a & b; }); }
  ElementSet operator-(const ElementSet& o) const { return combine(o, [](auto a, auto b) { return a & ~b; }); }
  ElementSet& operator|=(const ElementSet& o) { return *this = *this | o; }
  ElementSet& operator&=(const ElementSet& o) { return *this = *this & o; }

  bool operator==(const ElementSet& o) const noexcept { return parent_ == o.parent_ && words_ == o.words_; }

  /// Canonical order: by size, then lexicographically by ascending member
  /// lists ({0,1,3} < {0,2,3}).
  bool canonical_less(const ElementSet& o) const {
    const int a = size(), b = o.size();
    if (a != b) return a < b;
    for (int w = 0; w < kWords; ++w) {
      const auto x = words_[w], y = o.words_[w];
      if (x == y) continue;
      const auto diff = x ^ y;
      // The lowest differing element belongs to the lexicographically smaller list.
      return (x >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  const std::array<std::uint64_t, kWords>& words() const noexcept { return words_; }

  /// Labels of the members, ascending by index.
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for_each([&](Element e) { out.push_back(parent_->label(e)); });
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Element e) {
      if (!first) out += ",";
      out += parent_->label(e);
      first = false;
    });
    return out + "}";
  }

 private:
  void check_parent(const ElementSet& o) const {
    if (parent_ != o.parent_) throw ParentMismatch("sets belong to different groups");
  }
  template <typename Op>
  ElementSet combine(const ElementSet& o, Op op) const {
    check_parent(o);
    ElementSet r(*parent_);
    for (int w = 0; w < kWords; ++w) r.words_[w] = op(words_[w], o.words_[w]);
    return r;
  }

  const FiniteGroup* parent_;
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Smallest subgroup containing `seeds`: breadth-first closure under right
/// multiplication by the seeds, which in a finite group also yields inverses.
inline ElementSet generate_closure(const ElementSet& seeds) {
  const FiniteGroup& g = seeds.parent();
  std::vector<Element> gens = seeds.elements();
  ElementSet out = ElementSet::identity(g);
  std::vector<Element> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      const Element y = g.mul(queue[head], s);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace roughq

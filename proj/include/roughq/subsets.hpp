#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "roughq/element_set.hpp"

namespace roughq {

inline bool is_subgroup(const ElementSet& s) {
  if (!s.contains(kIdentity)) return false;
  const FiniteGroup& g = s.parent();
  bool ok = true;
  s.for_each([&](Element a) {
    if (!ok) return;
    if (!s.contains(g.inv(a))) {
      ok = false;
      return;
    }
    s.for_each([&](Element b) {
      if (ok && !s.contains(g.mul(a, b))) ok = false;
    });
  });
  return ok;
}

/// An element g with g s g^-1 != s, if any.
inline std::optional<Element> normality_witness(const ElementSet& s) {
  const FiniteGroup& g = s.parent();
  for (Element x = 0; x < g.order(); ++x) {
    bool moved = false;
    s.for_each([&](Element a) {
      if (!moved && !s.contains(g.conj(x, a))) moved = true;
    });
    if (moved) return x;
  }
  return std::nullopt;
}

inline bool is_normal(const ElementSet& s) { return is_subgroup(s) && !normality_witness(s); }

/// {xy : x in a, y in b}
inline ElementSet set_product(const ElementSet& a, const ElementSet& b) {
  if (&a.parent() != &b.parent()) throw ParentMismatch("set_product over different groups");
  const FiniteGroup& g = a.parent();
  ElementSet out(g);
  const auto right = b.elements();
  a.for_each([&](Element x) {
    for (Element y : right) out.insert(g.mul(x, y));
  });
  return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) { return a & b; }
inline ElementSet set_union(const ElementSet& a, const ElementSet& b) { return a | b; }
inline bool is_subset(const ElementSet& a, const ElementSet& b) { return a.is_subset_of(b); }

inline void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) { return a.canonical_less(b); });
}

/// Every subgroup exactly once, ascending by size then lexicographically.
///
/// Breadth-first generator extension: starting from {e}, each found subgroup
/// S is extended by every element outside it, closing <S, x>. Every subgroup
/// is reached because it is generated by adjoining its elements one at a time.
inline std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  if (g.order() > kMaxVerifyOrder)
    throw OrderTooLarge("subgroup enumeration supports order <= " + std::to_string(kMaxVerifyOrder));
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found{ElementSet::identity(g)};
  std::vector<std::vector<Element>> gens{{}};
  seen.insert(found.front());
  for (std::size_t head = 0; head < found.size(); ++head) {
    const ElementSet base = found[head];
    const std::vector<Element> base_gens = gens[head];
    ElementSet tried = base;
    for (Element x = 0; x < g.order(); ++x) {
      if (tried.contains(x)) continue;
      auto next_gens = base_gens;
      next_gens.push_back(x);
      ElementSet sub = generate_closure(ElementSet::of(g, next_gens));
      // Generators of the same cyclic subgroup <x> give the same <S, x>.
      const int ord = element_order(g, x);
      Element p = x;
      for (int k = 1; k < ord; ++k, p = g.mul(p, x))
        if (std::gcd(k, ord) == 1) tried.insert(p);
      if (seen.insert(sub).second) {
        found.push_back(sub);
        gens.push_back(std::move(next_gens));
      }
    }
  }
  sort_canonical(found);
  return found;
}

inline std::vector<ElementSet> normal_subgroups(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  std::erase_if(subs, [](const ElementSet& s) { return !is_normal(s); });
  return subs;
}

/// Conjugacy classes {g x g^-1 : g in G}, ordered by smallest member.
inline std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ElementSet> out;
  ElementSet covered(g);
  for (Element x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    ElementSet cls(g);
    for (Element a = 0; a < g.order(); ++a) cls.insert(g.conj(a, x));
    covered |= cls;
    out.push_back(cls);
  }
  return out;
}

}  // namespace roughq

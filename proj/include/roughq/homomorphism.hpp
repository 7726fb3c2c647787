#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "roughq/approximation.hpp"

namespace roughq {

/// A total map between finite groups, checked multiplicative on construction.
class GroupHom {
 public:
  const FiniteGroup& source() const noexcept { return *source_; }
  const FiniteGroup& target() const noexcept { return *target_; }
  const GroupPtr& source_ptr() const noexcept { return source_; }
  const GroupPtr& target_ptr() const noexcept { return target_; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  ElementSet kernel() const {
    ElementSet k(*source_);
    for (Element x = 0; x < source_->order(); ++x)
      if (map_[x] == kIdentity) k.insert(x);
    return k;
  }
  ElementSet image() const {
    ElementSet im(*target_);
    for (Element y : map_) im.insert(y);
    return im;
  }
  bool is_injective() const { return kernel().size() == 1; }
  bool is_surjective() const { return image().size() == target_->order(); }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  friend GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Element> map);

 private:
  GroupHom(GroupPtr s, GroupPtr t, std::vector<Element> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> map_;
};

inline GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Element> map) {
  const int n = source->order();
  if (static_cast<int>(map.size()) != n)
    throw NotHomomorphism("map has " + std::to_string(map.size()) + " entries, source order is " + std::to_string(n));
  for (Element x = 0; x < n; ++x)
    if (map[x] < 0 || map[x] >= target->order())
      throw NotHomomorphism("image of " + source->label(x) + " is not an element of the target");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (map[source->mul(x, y)] != target->mul(map[x], map[y]))
        throw NotHomomorphism("f(xy) != f(x)f(y) at x=" + source->label(x) + ", y=" + source->label(y));
  return GroupHom(std::move(source), std::move(target), std::move(map));
}

inline GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (&outer.source() != &inner.target()) throw ParentMismatch("composition of non-adjacent maps");
  std::vector<Element> m(inner.source().order());
  for (Element x = 0; x < inner.source().order(); ++x) m[x] = outer(inner(x));
  return make_hom(inner.source_ptr(), outer.target_ptr(), std::move(m));
}

/// A subgroup turned into a group of its own, with index maps both ways.
struct EmbeddedGroup {
  GroupPtr group;
  GroupPtr ambient;
  std::vector<Element> to_ambient;
  std::vector<Element> from_ambient;  // -1 outside the subgroup

  /// Translates a subset of the ambient group that lies inside the subgroup.
  ElementSet local(const ElementSet& s) const {
    ElementSet out(*group);
    s.for_each([&](Element x) {
      if (from_ambient[x] < 0) throw ParentMismatch(ambient->label(x) + " is outside the subgroup");
      out.insert(from_ambient[x]);
    });
    return out;
  }
};

/// Restricts the table of `g` to the subgroup `s`; the identity stays first and
/// the remaining elements keep their relative order and labels.
inline EmbeddedGroup induced_subgroup(const GroupPtr& g, const ElementSet& s) {
  if (!is_subgroup(s)) throw NotSubgroup(s.to_string() + " is not a subgroup");
  EmbeddedGroup e{nullptr, g, s.elements(), std::vector<Element>(g->order(), -1)};
  const int k = static_cast<int>(e.to_ambient.size());
  for (int i = 0; i < k; ++i) e.from_ambient[e.to_ambient[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(g->label(e.to_ambient[i]));
    for (int j = 0; j < k; ++j) table[i][j] = e.from_ambient[g->mul(e.to_ambient[i], e.to_ambient[j])];
  }
  e.group = build_from_cayley_table(table, std::move(labels), g->name() + "|" + s.to_string());
  return e;
}

/// Builds source -> target from images of the elements x of a domain in some
/// common ancestor group, rejecting maps that are not well defined.
inline GroupHom induced_hom(const GroupPtr& source, const GroupPtr& target, const ElementSet& domain,
                            const std::function<Element(Element)>& source_of,
                            const std::function<Element(Element)>& target_of) {
  std::vector<Element> m(source->order(), -1);
  domain.for_each([&](Element x) {
    const Element s = source_of(x), t = target_of(x);
    if (t < 0) throw NotHomomorphism("image of " + domain.parent().label(x) + " falls outside the target");
    if (m[s] >= 0 && m[s] != t)
      throw NotHomomorphism("map not well defined: representative " + domain.parent().label(x) + " disagrees");
    m[s] = t;
  });
  for (Element s = 0; s < source->order(); ++s)
    if (m[s] < 0) throw NotHomomorphism("element " + source->label(s) + " has no preimage in the domain");
  return make_hom(source, target, std::move(m));
}

/// x ↦ xN
inline GroupHom natural_projection(const GroupPtr& g, const ElementSet& n) {
  const QuotientGroup q = build_quotient(g, n);
  std::vector<Element> m(g->order());
  for (Element x = 0; x < g->order(); ++x) m[x] = q.coset_of(x);
  return make_hom(g, q.group_ptr(), std::move(m));
}

inline void require_nested(const ElementSet& inner, const ElementSet& outer, const char* what) {
  if (!inner.is_subset_of(outer)) throw NotNested(std::string(what) + ": " + inner.to_string() + " ⊄ " + outer.to_string());
}

/// xN ↦ xM for N ⊆ M
inline GroupHom refinement_hom(const QuotientGroup& qn, const QuotientGroup& qm) {
  require_nested(qn.normal(), qm.normal(), "refinement needs N ⊆ M");
  return induced_hom(qn.group_ptr(), qm.group_ptr(), ElementSet::full(qn.parent()),
                     [&](Element x) { return qn.coset_of(x); }, [&](Element x) { return qm.coset_of(x); });
}

inline GroupHom refinement_hom(const GroupPtr& g, const ElementSet& n, const ElementSet& m) {
  require_normal(n);
  require_normal(m);
  require_nested(n, m, "refinement needs N ⊆ M");
  return refinement_hom(build_quotient(g, n), build_quotient(g, m));
}

/// Brute-force isomorphism search: picks a small generating set of `a`,
/// tries every order-preserving assignment of generator images in `b`, and
/// extends each along the Cayley graph. Intended for orders up to 48.
inline std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  const int n = a->order();
  if (n != b->order()) return std::nullopt;
  std::vector<int> ord_a(n), ord_b(n);
  for (Element x = 0; x < n; ++x) {
    ord_a[x] = element_order(*a, x);
    ord_b[x] = element_order(*b, x);
  }
  {
    auto ha = ord_a, hb = ord_b;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }

  std::vector<Element> by_order(n);
  for (Element x = 0; x < n; ++x) by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element x, Element y) { return ord_a[x] > ord_a[y]; });
  std::vector<Element> gens;
  ElementSet span = ElementSet::identity(*a);
  for (Element x : by_order) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generate_closure(ElementSet::of(*a, gens));
  }

  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element y = 0; y < n; ++y)
      if (ord_b[y] == ord_a[gens[i]]) candidates[i].push_back(y);

  std::vector<Element> images(gens.size());
  std::optional<GroupHom> found;
  auto try_extend = [&]() -> bool {
    std::vector<Element> m(n, -1);
    m[kIdentity] = kIdentity;
    std::vector<Element> queue{kIdentity};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Element y = a->mul(x, gens[i]);
        const Element img = b->mul(m[x], images[i]);
        if (m[y] < 0) {
          m[y] = img;
          queue.push_back(y);
        } else if (m[y] != img) {
          return false;
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (Element y : m) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (m[a->mul(x, y)] != b->mul(m[x], m[y])) return false;
    found = make_hom(a, b, std::move(m));
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == gens.size()) return try_extend();
    for (Element y : candidates[i]) {
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  search(0);
  return found;
}

inline bool are_isomorphic(const GroupPtr& a, const GroupPtr& b) { return find_isomorphism(a, b).has_value(); }

// ---------------------------------------------------------------------------
// Maps between lower approximations

/// One quotient level G/N with the lower approximation of H/N and that lower
/// approximation as a group.
struct LowerLevel {
  QuotientGroup quotient;
  ElementSet subject;  // H/N
  ElementSet lower;    // lower approximation of H/N, a normal subgroup of G/N
  ElementSet lifted;   // its preimage in G
  EmbeddedGroup lower_group;
};

inline LowerLevel lower_level(const GroupPtr& g, const ElementSet& n, const ElementSet& h) {
  ApproximationSpace space(build_quotient(g, n));
  ElementSet subject = project_subset(space.quotient(), h);
  ElementSet lower = space.lower(subject);
  ElementSet lifted = lift_subset(space.quotient(), lower);
  EmbeddedGroup eg = induced_subgroup(space.quotient().group_ptr(), lower);
  return LowerLevel{space.quotient(), subject, lower, lifted, std::move(eg)};
}

/// The constructions for N ⊆ M ⊆ H with N, M normal and H a subgroup.
/// K and T are the preimages in G of the lower approximations of H/N and H/M.
struct Theorem8Data {
  LowerLevel at_n;
  LowerLevel at_m;
  ElementSet K;
  ElementSet T;
  /// (G/N)/(K/N) -> (G/M)/(T/M), xN(K/N) ↦ xM(T/M)
  GroupHom psi1;
  /// (H/N)/(K/N) -> (H/M)/(T/M), same formula
  GroupHom psi2;
  /// K/N -> T/M, xN ↦ xM
  GroupHom phi;
  /// M/N inside the source of phi
  ElementSet m_over_n;
  bool m_within_k = false;
  bool k_within_h = false;
  /// G/K ≅ G/T, H/K ≅ H/T and K/M ≅ T/M found by explicit search
  std::optional<GroupHom> g_over_k_iso;
  std::optional<GroupHom> h_over_k_iso;
  std::optional<GroupHom> k_over_m_iso;
};

inline Theorem8Data theorem8_data(const GroupPtr& g, const ElementSet& n, const ElementSet& m, const ElementSet& h) {
  require_normal(n);
  require_normal(m);
  require_nested(n, m, "theorem 8 needs N ⊆ M");
  if (!is_subgroup(h)) throw NotSubgroupH(h.to_string() + " is not a subgroup");
  if (!m.is_subset_of(h)) throw PreconditionM("M = " + m.to_string() + " is not contained in H = " + h.to_string());

  LowerLevel ln = lower_level(g, n, h);
  LowerLevel lm = lower_level(g, m, h);
  const QuotientGroup& qn = ln.quotient;
  const QuotientGroup& qm = lm.quotient;

  const QuotientGroup outer_n = build_quotient(qn.group_ptr(), ln.lower);
  const QuotientGroup outer_m = build_quotient(qm.group_ptr(), lm.lower);
  GroupHom psi1 = induced_hom(
      outer_n.group_ptr(), outer_m.group_ptr(), ElementSet::full(*g),
      [&](Element x) { return outer_n.coset_of(qn.coset_of(x)); },
      [&](Element x) { return outer_m.coset_of(qm.coset_of(x)); });

  const EmbeddedGroup hn = induced_subgroup(qn.group_ptr(), ln.subject);
  const EmbeddedGroup hm = induced_subgroup(qm.group_ptr(), lm.subject);
  const QuotientGroup inner_n = build_quotient(hn.group, hn.local(ln.lower));
  const QuotientGroup inner_m = build_quotient(hm.group, hm.local(lm.lower));
  GroupHom psi2 = induced_hom(
      inner_n.group_ptr(), inner_m.group_ptr(), h,
      [&](Element x) { return inner_n.coset_of(hn.from_ambient[qn.coset_of(x)]); },
      [&](Element x) { return inner_m.coset_of(hm.from_ambient[qm.coset_of(x)]); });

  GroupHom phi = induced_hom(
      ln.lower_group.group, lm.lower_group.group, ln.lifted,
      [&](Element x) { return ln.lower_group.from_ambient[qn.coset_of(x)]; },
      [&](Element x) { return lm.lower_group.from_ambient[qm.coset_of(x)]; });
  ElementSet m_over_n(*ln.lower_group.group);
  m.for_each([&](Element x) {
    const Element local = ln.lower_group.from_ambient[qn.coset_of(x)];
    if (local >= 0) m_over_n.insert(local);
  });

  Theorem8Data d{ln, lm, ln.lifted, lm.lifted, std::move(psi1), std::move(psi2), std::move(phi), m_over_n, false, false, {}, {}, {}};
  d.m_within_k = m.is_subset_of(d.K);
  d.k_within_h = d.K.is_subset_of(h);

  d.g_over_k_iso = find_isomorphism(build_quotient(g, d.K).group_ptr(), build_quotient(g, d.T).group_ptr());
  const EmbeddedGroup hg = induced_subgroup(g, h);
  d.h_over_k_iso =
      find_isomorphism(build_quotient(hg.group, hg.local(d.K)).group_ptr(), build_quotient(hg.group, hg.local(d.T)).group_ptr());
  if (d.m_within_k) {
    const EmbeddedGroup kg = induced_subgroup(g, d.K);
    const EmbeddedGroup tg = induced_subgroup(g, d.T);
    d.k_over_m_iso = find_isomorphism(build_quotient(kg.group, kg.local(m)).group_ptr(),
                                      build_quotient(tg.group, tg.local(m)).group_ptr());
  }
  return d;
}

/// The three onto maps between lower approximations at N∩M, N and NM.
struct CorollaryChain {
  LowerLevel at_meet;  // N∩M
  LowerLevel at_n;
  LowerLevel at_join;  // NM
  /// x(N∩M) ↦ xN, expected kernel N/(N∩M)
  GroupHom alpha;
  /// xN ↦ x(NM), expected kernel NM/N
  GroupHom beta;
  /// x(N∩M) ↦ x(NM), expected kernel NM/(N∩M)
  GroupHom gamma;
  ElementSet alpha_kernel_expected;
  ElementSet beta_kernel_expected;
  ElementSet gamma_kernel_expected;
};

inline CorollaryChain corollary_chain(const GroupPtr& g, const ElementSet& n, const ElementSet& m, const ElementSet& h) {
  require_normal(n);
  require_normal(m);
  if (!is_subgroup(h)) throw NotSubgroupH(h.to_string() + " is not a subgroup");
  if (!n.is_subset_of(h)) throw MissingKernel("N = " + n.to_string() + " is not contained in H");
  if (!m.is_subset_of(h)) throw PreconditionM("M = " + m.to_string() + " is not contained in H");

  const ElementSet meet = n & m;
  const ElementSet join = set_product(n, m);
  LowerLevel lo = lower_level(g, meet, h);
  LowerLevel mid = lower_level(g, n, h);
  LowerLevel hi = lower_level(g, join, h);

  auto local_of = [](const LowerLevel& l) {
    return [&l](Element x) { return l.lower_group.from_ambient[l.quotient.coset_of(x)]; };
  };
  GroupHom alpha = induced_hom(lo.lower_group.group, mid.lower_group.group, lo.lifted, local_of(lo), local_of(mid));
  GroupHom beta = induced_hom(mid.lower_group.group, hi.lower_group.group, mid.lifted, local_of(mid), local_of(hi));
  GroupHom gamma = induced_hom(lo.lower_group.group, hi.lower_group.group, lo.lifted, local_of(lo), local_of(hi));

  auto expected = [&](const LowerLevel& l, const ElementSet& big) {
    ElementSet k(*l.lower_group.group);
    big.for_each([&](Element x) {
      const Element local = l.lower_group.from_ambient[l.quotient.coset_of(x)];
      if (local >= 0) k.insert(local);
    });
    return k;
  };
  ElementSet ka = expected(lo, n);
  ElementSet kb = expected(mid, join);
  ElementSet kc = expected(lo, join);
  return CorollaryChain{lo,           mid, hi, std::move(alpha), std::move(beta), std::move(gamma),
                        std::move(ka), std::move(kb), std::move(kc)};
}

}  // namespace roughq

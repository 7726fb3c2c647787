#pragma once

#include <string>
#include <vector>

#include "roughq/subsets.hpp"

namespace roughq {

/// Left cosets xN of a normal subgroup, each named by its minimal element.
struct CosetPartition {
  GroupPtr parent;
  ElementSet normal;
  std::vector<Element> reps;      // reps[0] == identity
  std::vector<Element> coset_of;  // parent element -> position in reps

  int count() const noexcept { return static_cast<int>(reps.size()); }
};

inline void require_normal(const ElementSet& n) {
  if (!is_subgroup(n)) throw NotSubgroup(n.to_string() + " is not a subgroup of " + n.parent().name());
  if (auto g = normality_witness(n))
    throw NotNormal(n.to_string() + " is not normal: conjugation by " + n.parent().label(*g) + " moves it");
}

inline CosetPartition coset_partition(const GroupPtr& g, const ElementSet& n) {
  if (&n.parent() != g.get()) throw ParentMismatch("normal subgroup belongs to a different group");
  require_normal(n);
  CosetPartition p{g, n, {}, std::vector<Element>(g->order(), -1)};
  const auto members = n.elements();
  for (Element x = 0; x < g->order(); ++x) {
    if (p.coset_of[x] >= 0) continue;
    const auto id = static_cast<Element>(p.reps.size());
    p.reps.push_back(x);
    for (Element m : members) p.coset_of[g->mul(x, m)] = id;
  }
  return p;
}

/// G/N as a group in its own right, linked back to G through its partition.
/// Element i of `group()` is the coset of `partition().reps[i]`; labels read
/// "<rep>N", with the identity coset labelled "N".
class QuotientGroup {
 public:
  QuotientGroup(GroupPtr group, CosetPartition partition)
      : group_(std::move(group)), partition_(std::move(partition)) {}

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const FiniteGroup& parent() const noexcept { return *partition_.parent; }
  const GroupPtr& parent_ptr() const noexcept { return partition_.parent; }
  const CosetPartition& partition() const noexcept { return partition_; }
  const ElementSet& normal() const noexcept { return partition_.normal; }
  int order() const noexcept { return group_->order(); }

  Element coset_of(Element x) const { return partition_.coset_of[x]; }
  Element rep(Element coset) const { return partition_.reps[coset]; }

  /// All parent elements of one coset.
  ElementSet coset_members(Element coset) const {
    ElementSet out(parent());
    partition_.normal.for_each([&](Element m) { out.insert(parent().mul(rep(coset), m)); });
    return out;
  }

  /// Accepts the quotient's own labels, plus "<x>N" for any element x of the
  /// coset (so "(3412)N" names the same coset as "(1234)N").
  std::optional<Element> find(std::string_view label) const {
    if (auto e = group_->find(label)) return e;
    if (label.size() > 1 && label.back() == 'N') {
      if (auto x = parent().find(label.substr(0, label.size() - 1))) return coset_of(*x);
    }
    return std::nullopt;
  }
  Element at(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw UnknownLabel("'" + std::string(label) + "' is not a coset in " + group_->name());
  }

 private:
  GroupPtr group_;
  CosetPartition partition_;
};

inline QuotientGroup build_quotient(const GroupPtr& g, const ElementSet& n) {
  CosetPartition p = coset_partition(g, n);
  const int k = p.count();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = p.coset_of[g->mul(p.reps[i], p.reps[j])];
  // (xN)(yN) = xyN must not depend on the representatives.
  for (Element x = 0; x < g->order(); ++x)
    for (Element y = 0; y < g->order(); ++y)
      if (table[p.coset_of[x]][p.coset_of[y]] != p.coset_of[g->mul(x, y)])
        throw NotNormal("coset product not well defined at (" + g->label(x) + ", " + g->label(y) + ")");
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int i = 0; i < k; ++i) labels.push_back(i == 0 ? std::string("N") : g->label(p.reps[i]) + "N");
  auto q = build_from_cayley_table(table, std::move(labels), g->name() + "/" + n.to_string());
  return QuotientGroup(std::move(q), std::move(p));
}

/// H/N = {xN : x in H}. Requires N ⊆ H.
inline ElementSet project_subset(const QuotientGroup& q, const ElementSet& h) {
  if (&h.parent() != &q.parent()) throw ParentMismatch("subset belongs to a different group than the quotient's parent");
  if (!q.normal().is_subset_of(h))
    throw MissingKernel("N = " + q.normal().to_string() + " is not contained in H = " + h.to_string());
  ElementSet out(q.group());
  h.for_each([&](Element x) { out.insert(q.coset_of(x)); });
  return out;
}

/// Union of the cosets in `s`.
inline ElementSet lift_subset(const QuotientGroup& q, const ElementSet& s) {
  if (&s.parent() != &q.group()) throw ParentMismatch("subset does not belong to the quotient");
  ElementSet out(q.parent());
  const auto members = q.normal().elements();
  s.for_each([&](Element c) {
    for (Element m : members) out.insert(q.parent().mul(q.rep(c), m));
  });
  return out;
}

}  // namespace roughq

#pragma once

#include <string>
#include <vector>

#include "roughq/quotient.hpp"

namespace roughq {

/// (G/N, θ): the quotient together with its θ-classes, where xN θ yN iff the
/// cosets are conjugate in G/N.
class ApproximationSpace {
 public:
  explicit ApproximationSpace(QuotientGroup q) : quotient_(std::move(q)) {
    const FiniteGroup& qg = quotient_.group();
    classes_ = conjugacy_classes(qg);
    class_of_.assign(qg.order(), -1);
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
      classes_[c].for_each([&](Element x) { class_of_[x] = c; });
  }

  const QuotientGroup& quotient() const noexcept { return quotient_; }
  const FiniteGroup& group() const noexcept { return quotient_.group(); }
  const std::vector<ElementSet>& classes() const noexcept { return classes_; }
  int class_of(Element coset) const { return class_of_[coset]; }
  /// [xN]_θ
  const ElementSet& class_set(Element coset) const { return classes_[class_of_[coset]]; }

  /// {xN : [xN]_θ ⊆ s}
  ElementSet lower(const ElementSet& s) const {
    check_subject(s);
    ElementSet out(group());
    for (const auto& c : classes_)
      if (c.is_subset_of(s)) out |= c;
    return out;
  }

  /// {xN : [xN]_θ ∩ s ≠ ∅}
  ElementSet upper(const ElementSet& s) const {
    check_subject(s);
    ElementSet out(group());
    for (const auto& c : classes_)
      if (c.intersects(s)) out |= c;
    return out;
  }

 private:
  void check_subject(const ElementSet& s) const {
    if (&s.parent() != &group()) throw ParentMismatch("subject is not a subset of this quotient");
    if (!s.contains(kIdentity))
      throw MissingIdentityCoset("subject " + s.to_string() + " does not contain the identity coset N");
  }

  QuotientGroup quotient_;
  std::vector<ElementSet> classes_;
  std::vector<int> class_of_;
};

inline ApproximationSpace theta_classes(QuotientGroup q) { return ApproximationSpace(std::move(q)); }

inline ElementSet lower_approximation(const ApproximationSpace& a, const ElementSet& s) { return a.lower(s); }
inline ElementSet upper_approximation(const ApproximationSpace& a, const ElementSet& s) { return a.upper(s); }

/// Apr(H/N) = (lower, upper); lower ⊆ subject ⊆ upper always holds.
struct RoughPair {
  ElementSet subject;
  ElementSet lower;
  ElementSet upper;

  bool is_rough() const { return !(lower == upper); }
};

inline RoughPair approximation_pair(const ApproximationSpace& a, const ElementSet& s) {
  return RoughPair{s, a.lower(s), a.upper(s)};
}

struct RoughClassification {
  bool upper_is_subgroup = false;
  bool upper_is_normal = false;
  bool lower_is_subgroup = false;
  bool lower_is_normal = false;
  bool is_rough = false;
  /// Named kinds ("upper rough subgroup", "rough normal subgroup", ...);
  /// empty unless the pair is rough.
  std::vector<std::string> labels;
};

/// Raw flags are reported even for non-rough pairs; the rough-subgroup names
/// only apply when lower != upper.
inline RoughClassification classify_rough_subgroup(const ApproximationSpace& a, const ElementSet& s) {
  const RoughPair p = approximation_pair(a, s);
  RoughClassification c;
  c.upper_is_subgroup = is_subgroup(p.upper);
  c.upper_is_normal = is_normal(p.upper);
  c.lower_is_subgroup = is_subgroup(p.lower);
  c.lower_is_normal = is_normal(p.lower);
  c.is_rough = p.is_rough();
  if (c.is_rough) {
    if (c.upper_is_subgroup) c.labels.emplace_back("upper rough subgroup");
    if (c.upper_is_normal) c.labels.emplace_back("upper rough normal subgroup");
    if (c.lower_is_subgroup) c.labels.emplace_back("lower rough subgroup");
    if (c.lower_is_normal) c.labels.emplace_back("lower rough normal subgroup");
    if (c.upper_is_subgroup && c.lower_is_subgroup) c.labels.emplace_back("rough subgroup");
    if (c.upper_is_normal && c.lower_is_normal) c.labels.emplace_back("rough normal subgroup");
  }
  return c;
}

/// Builds G/N and its θ-classes in one step.
inline ApproximationSpace approximation_space(const GroupPtr& g, const ElementSet& n) {
  return ApproximationSpace(build_quotient(g, n));
}

}  // namespace roughq

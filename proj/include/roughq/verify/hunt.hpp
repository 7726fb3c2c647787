#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "roughq/verify/checks.hpp"

namespace roughq::verify {

struct Witness {
  std::string property;
  std::string group;
  json instance;
  json detail;
};

inline json to_json(const Witness& w) {
  json j = w.instance;
  j["property"] = w.property;
  j["group"] = w.group;
  j["detail"] = w.detail;
  return j;
}

struct HuntProperty {
  std::string_view name;
  Shape shape;
  /// Returns the detail object when the instance exhibits the property.
  std::optional<json> (*test)(Evaluation&);
};

namespace hunts {

inline json strict_detail(const ElementSet& lhs, const ElementSet& rhs) {
  return json{{"lhs", labels_of(lhs)}, {"rhs", labels_of(rhs)}};
}

inline bool proper_subset(const ElementSet& a, const ElementSet& b) { return a.is_subset_of(b) && !(a == b); }

inline std::optional<json> upper_not_subgroup(Evaluation& e) {
  const ElementSet up = e.upper(e.n(), e.h1());
  if (is_subgroup(up)) return std::nullopt;
  return json{{"upper", labels_of(up)}, {"quotient_order", e.space(e.n()).group().order()}};
}

inline std::optional<json> lower_union_strict(Evaluation& e) {
  const ElementSet lhs = e.lower(e.n(), e.h1()) | e.lower(e.n(), e.h2());
  const ElementSet rhs = e.lower(e.n(), e.h1() | e.h2());
  if (!proper_subset(lhs, rhs)) return std::nullopt;
  return strict_detail(lhs, rhs);
}

inline std::optional<json> upper_intersection_strict(Evaluation& e) {
  const ApproximationSpace& a = e.space(e.n());
  const ElementSet p1 = e.project(e.n(), e.h1()), p2 = e.project(e.n(), e.h2());
  const ElementSet lhs = a.upper(p1 & p2), rhs = a.upper(p1) & a.upper(p2);
  if (!proper_subset(lhs, rhs)) return std::nullopt;
  return strict_detail(lhs, rhs);
}

inline std::optional<json> lower_product_strict(Evaluation& e) {
  const ElementSet lhs = set_product(e.lower(e.n(), e.h1()), e.lower(e.n(), e.h2()));
  const ElementSet rhs = e.lower(e.n(), set_product(e.h1(), e.h2()));
  if (!proper_subset(lhs, rhs)) return std::nullopt;
  return strict_detail(lhs, rhs);
}

inline std::optional<json> prop5_1_strict(Evaluation& e) {
  const ApproximationSpace& a = e.space(e.n());
  const ElementSet lhs = e.upper(e.n(), e.h1() & e.h2());
  const ElementSet rhs = a.upper(e.project(e.n(), e.h1()) & e.project(e.n(), e.h2()));
  if (!proper_subset(lhs, rhs)) return std::nullopt;
  return strict_detail(lhs, rhs);
}

inline std::optional<json> cor12_fails(Evaluation& e) {
  if (e.instance().h1_is_subgroup && e.instance().h2_is_subgroup) return std::nullopt;
  const ApproximationSpace& a = e.space(e.n());
  const ElementSet both = e.project(e.n(), e.h1()) & e.project(e.n(), e.h2());
  const ElementSet lo_meet = e.lower(e.n(), e.h1() & e.h2()), lo_both = a.lower(both);
  const ElementSet up_meet = e.upper(e.n(), e.h1() & e.h2()), up_both = a.upper(both);
  if (lo_meet == lo_both && up_meet == up_both) return std::nullopt;
  return json{{"lower_of_meet", labels_of(lo_meet)},
              {"lower_of_quotient_meet", labels_of(lo_both)},
              {"upper_of_meet", labels_of(up_meet)},
              {"upper_of_quotient_meet", labels_of(up_both)}};
}

inline std::optional<json> prop20_4_upper(Evaluation& e) {
  const ElementSet lower_n = e.lifted_lower(e.n(), e.h1());
  const ElementSet upper_meet = e.lifted_upper(e.meet(), e.h1());
  if (lower_n == upper_meet) return std::nullopt;
  return json{{"lower_at_N", labels_of(lower_n)}, {"upper_at_meet", labels_of(upper_meet)}};
}

}  // namespace hunts

inline const std::vector<HuntProperty>& hunt_properties() {
  static const std::vector<HuntProperty> props = {
      {"upper-not-subgroup", Shape::SubgroupSubject, hunts::upper_not_subgroup},
      {"lower-union-strict", Shape::SubjectPair, hunts::lower_union_strict},
      {"upper-intersection-strict", Shape::IntersectionPair, hunts::upper_intersection_strict},
      {"lower-product-strict", Shape::SubjectPair, hunts::lower_product_strict},
      {"prop5-1-strict", Shape::IntersectionPair, hunts::prop5_1_strict},
      {"cor12-fails-without-subgroups", Shape::IntersectionPair, hunts::cor12_fails},
      {"prop20-4-upper-reading-fails", Shape::TwoNormalSubgroup, hunts::prop20_4_upper},
  };
  return props;
}

inline const HuntProperty& find_property(std::string_view name) {
  for (const auto& p : hunt_properties())
    if (p.name == name) return p;
  throw UnknownProperty("unknown property '" + std::string(name) + "'");
}

/// Hunting wants every raw pair on A4-sized groups, so the pair cap is raised.
inline EnumerationOptions hunt_options(std::uint64_t seed = 0) {
  EnumerationOptions opt;
  opt.seed = seed;
  opt.pair_cap = 1 << 17;
  return opt;
}

/// Witnesses in corpus order after a stable sort by group order; `limit` of
/// zero means no limit.
inline std::vector<Witness> hunt(std::string_view property, std::vector<GroupPtr> corpus,
                                 const EnumerationOptions& opt = hunt_options(), std::size_t limit = 0) {
  const HuntProperty& p = find_property(property);
  std::stable_sort(corpus.begin(), corpus.end(), [](const GroupPtr& a, const GroupPtr& b) { return a->order() < b->order(); });
  std::vector<Witness> out;
  for (const auto& g : corpus) {
    const GroupContext ctx(g);
    bool done = false;
    for_each_instance(ctx, p.shape, opt, [&](const Instance& in) {
      if (done) return;
      Evaluation e(in);
      if (auto detail = p.test(e)) {
        out.push_back(Witness{std::string(p.name), g->name(), describe(in), std::move(*detail)});
        if (limit && out.size() >= limit) done = true;
      }
    });
    if (done) break;
  }
  return out;
}

}  // namespace roughq::verify

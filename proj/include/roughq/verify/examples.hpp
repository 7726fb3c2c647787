#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "roughq/catalog.hpp"
#include "roughq/verify/report.hpp"

namespace roughq::verify {

// Golden reproductions of the four worked examples. Every set is written the
// way it is printed in the source text; cycle strings are parsed in any
// rotation, and cosets may be named by any of their members.

namespace golden {

inline ElementSet parse_set(const FiniteGroup& g, std::initializer_list<std::string_view> labels) {
  ElementSet s(g);
  for (auto l : labels) s.insert(g.at(l));
  return s;
}

inline ElementSet parse_cosets(const QuotientGroup& q, std::initializer_list<std::string_view> labels) {
  ElementSet s(q.group());
  for (auto l : labels) s.insert(q.at(l));
  return s;
}

inline ElementSet klein_in(const FiniteGroup& g) { return parse_set(g, {"I", "(12)(34)", "(13)(24)", "(14)(23)"}); }

inline bool all_singletons(const ApproximationSpace& a) {
  for (const auto& c : a.classes())
    if (c.size() != 1) return false;
  return true;
}

inline std::pair<Verdict, json> example_q8() {
  Tally t;
  const GroupPtr g = builtin_group("quaternion8");
  const ElementSet n = parse_set(*g, {"1", "-1"});
  const ElementSet h = parse_set(*g, {"1", "-1", "i", "j"});
  t.holds("N normal", is_normal(n));
  t.holds("H not a subgroup", !is_subgroup(h));
  const ApproximationSpace a = approximation_space(g, n);
  const QuotientGroup& q = a.quotient();
  t.equal("iN = -iN", parse_cosets(q, {"iN"}), parse_cosets(q, {"-iN"}));
  t.equal("jN = -jN", parse_cosets(q, {"jN"}), parse_cosets(q, {"-jN"}));
  t.equal("kN = -kN", parse_cosets(q, {"kN"}), parse_cosets(q, {"-kN"}));
  t.holds("|G/N| = 4", q.order() == 4);
  const ElementSet hn = project_subset(q, h);
  t.equal("H/N", hn, parse_cosets(q, {"N", "iN", "jN"}));
  t.holds("theta classes are singletons", all_singletons(a));
  const ElementSet lower = a.lower(hn), upper = a.upper(hn);
  t.equal("lower = H/N", lower, hn);
  t.equal("upper = H/N", upper, hn);
  t.holds("lower not a subgroup", !is_subgroup(lower));
  t.holds("upper not a subgroup", !is_subgroup(upper));
  return t.finish();
}

inline std::pair<Verdict, json> example_13() {
  Tally t;
  const GroupPtr g = builtin_group("symmetric4");
  const ElementSet n = klein_in(*g);
  const ElementSet h1 = parse_set(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(1324)"});
  const ElementSet h2 = parse_set(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(3412)", "(1243)"});
  t.holds("N normal", is_normal(n));
  const ApproximationSpace a = approximation_space(g, n);
  const QuotientGroup& q = a.quotient();
  auto coset = [&](std::string_view rep) { return q.coset_members(q.at(std::string(rep) + "N")); };
  t.equal("(3412)N", coset("(3412)"), parse_set(*g, {"(13)", "(24)", "(2143)", "(3412)"}));
  t.equal("(1324)N", coset("(1324)"), parse_set(*g, {"(12)", "(34)", "(4231)", "(1324)"}));
  t.equal("(1243)N", coset("(1243)"), parse_set(*g, {"(14)", "(23)", "(3421)", "(1243)"}));
  // The source lists (124) in (123)N and (142) in (132)N; the other three
  // members of each list pin the cosets, which contain (142) and (124).
  t.equal("(123)N", coset("(123)"), parse_set(*g, {"(123)", "(134)", "(142)", "(243)"}));
  t.equal("(132)N", coset("(132)"), parse_set(*g, {"(132)", "(143)", "(124)", "(234)"}));
  t.holds("|G/N| = 6", q.order() == 6);

  const ElementSet p1 = project_subset(q, h1), p2 = project_subset(q, h2);
  t.equal("H1/N", p1, parse_cosets(q, {"N", "(1324)N"}));
  t.equal("H2/N", p2, parse_cosets(q, {"N", "(3412)N", "(1243)N"}));
  t.equal("G/N", ElementSet::full(q.group()),
          parse_cosets(q, {"N", "(1234)N", "(1324)N", "(1243)N", "(123)N", "(132)N"}));
  t.equal("[(1234)N]", a.class_set(q.at("(1234)N")), parse_cosets(q, {"(1234)N", "(1324)N", "(1243)N"}));
  t.equal("[(123)N]", a.class_set(q.at("(123)N")), parse_cosets(q, {"(132)N", "(123)N"}));
  t.equal("[N]", a.class_set(kIdentity), parse_cosets(q, {"N"}));

  const ElementSet just_n = parse_cosets(q, {"N"});
  t.equal("lower(H1/N)", a.lower(p1), just_n);
  t.equal("lower(H2/N)", a.lower(p2), just_n);
  // The printed value of (H1H2)/N is (H1/N) ∪ (H2/N); the pairwise product
  // of two distinct transposition cosets of S3 is a 3-cycle coset, so the
  // computed (H1H2)/N is all of G/N and the first claim below fails.
  const ElementSet prod = project_subset(q, set_product(h1, h2));
  const ElementSet printed = parse_cosets(q, {"N", "(1324)N", "(3412)N", "(1243)N"});
  t.equal("(H1H2)/N", prod, printed);
  t.equal("lower((H1H2)/N)", a.lower(prod), printed);
  t.equal("lower of the printed (H1H2)/N", a.lower(printed), printed);
  t.note("computed (H1H2)/N", labels_of(prod));
  const ElementSet lower_prod = set_product(a.lower(p1), a.lower(p2));
  t.equal("lower(H1/N)lower(H2/N)", lower_prod, just_n);
  t.holds("N/N != lower((H1H2)/N)", !(lower_prod == a.lower(prod)));
  return t.finish();
}

inline std::pair<Verdict, json> example_22() {
  Tally t;
  const GroupPtr g = builtin_group("symmetric4");
  const ElementSet n = klein_in(*g);
  const ElementSet h = parse_set(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(4231)"});
  t.holds("N normal", is_normal(n));
  t.holds("H is a subgroup", is_subgroup(h));
  t.holds("H is not normal", !is_normal(h));
  const ApproximationSpace a = approximation_space(g, n);
  const QuotientGroup& q = a.quotient();
  const ElementSet hn = project_subset(q, h);
  t.equal("H/N", hn, parse_cosets(q, {"N", "(1324)N"}));
  const ElementSet upper = a.upper(hn), lower = a.lower(hn);
  t.equal("upper(H/N)", upper, parse_cosets(q, {"N", "(1234)N", "(1324)N", "(1243)N"}));
  t.holds("|upper| = 4 does not divide 6", upper.size() == 4 && q.order() % upper.size() != 0);
  t.holds("upper not a subgroup", !is_subgroup(upper));
  t.equal("lower(H/N)", lower, parse_cosets(q, {"N"}));
  t.holds("lower is a normal subgroup", is_normal(lower));
  t.holds("lower is a proper subset of H/N", lower.is_subset_of(hn) && !(lower == hn));
  const EmbeddedGroup hg = induced_subgroup(q.group_ptr(), hn);
  t.holds("lower normal in H/N", is_normal(hg.local(lower)));
  return t.finish();
}

inline std::pair<Verdict, json> example_a4() {
  Tally t;
  const GroupPtr g = builtin_group("alternating4");
  const ElementSet n = klein_in(*g);
  const ElementSet h1 = parse_set(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(123)", "(124)"});
  const ElementSet h2 = parse_set(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(132)", "(142)"});
  t.holds("N normal", is_normal(n));
  t.holds("H1 not a subgroup", !is_subgroup(h1));
  t.holds("H2 not a subgroup", !is_subgroup(h2));
  const ApproximationSpace a = approximation_space(g, n);
  const QuotientGroup& q = a.quotient();
  t.equal("(132)N = (124)N", parse_cosets(q, {"(132)N"}), parse_cosets(q, {"(124)N"}));
  t.equal("(123)N = (142)N", parse_cosets(q, {"(123)N"}), parse_cosets(q, {"(142)N"}));
  const ElementSet all = ElementSet::full(q.group());
  t.equal("G/N", all, parse_cosets(q, {"N", "(123)N", "(132)N"}));
  const ElementSet p1 = project_subset(q, h1), p2 = project_subset(q, h2);
  t.equal("H1/N = G/N", p1, all);
  t.equal("H2/N = G/N", p2, all);
  t.equal("H1 ∩ H2 = N", h1 & h2, n);
  const ElementSet meet = project_subset(q, h1 & h2);
  const ElementSet just_n = parse_cosets(q, {"N"});
  t.equal("lower((H1∩H2)/N)", a.lower(meet), just_n);
  t.equal("upper((H1∩H2)/N)", a.upper(meet), just_n);
  t.equal("lower((H1/N)∩(H2/N))", a.lower(p1 & p2), all);
  t.equal("upper((H1/N)∩(H2/N))", a.upper(p1 & p2), all);
  t.holds("equality of intersections fails", !(a.lower(meet) == a.lower(p1 & p2)) && !(a.upper(meet) == a.upper(p1 & p2)));
  return t.finish();
}

}  // namespace golden

}  // namespace roughq::verify

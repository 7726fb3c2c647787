#include <gtest/gtest.h>

#include "support.hpp"

using namespace roughq;
using support::labelled;

TEST(CosetPartition, WholeGroupIsOneCoset) {
  const auto g = builtin_group("symmetric3");
  const auto p = coset_partition(g, ElementSet::full(*g));
  EXPECT_EQ(p.count(), 1);
  EXPECT_EQ(p.reps[0], kIdentity);
}

TEST(CosetPartition, KleinInSymmetricFour) {
  const auto g = builtin_group("symmetric4");
  const auto p = coset_partition(g, support::v4_in(*g));
  EXPECT_EQ(p.count(), 6);
  EXPECT_EQ(p.coset_of[g->at("(3412)")], p.coset_of[g->at("(2143)")]);
  EXPECT_EQ(p.coset_of[g->at("(1234)")], p.coset_of[g->at("(1432)")]);
  for (int c = 0; c < p.count(); ++c)
    for (Element x = 0; x < g->order(); ++x)
      if (p.coset_of[x] == c) {
        EXPECT_LE(p.reps[c], x);
      }
}

TEST(CosetPartition, Errors) {
  const auto g = builtin_group("symmetric4");
  EXPECT_THROW(coset_partition(g, labelled(*g, {"I", "(12)"}) | labelled(*g, {"(34)", "(12)(34)"})), NotNormal);
  EXPECT_THROW(coset_partition(g, labelled(*g, {"I", "(123)"})), NotSubgroup);
  try {
    coset_partition(g, labelled(*g, {"I", "(12)"}));
    FAIL();
  } catch (const NotNormal& e) {
    EXPECT_EQ(e.kind(), "NotNormal");
  }
}

TEST(Quotient, QuaternionCenter) {
  const auto g = builtin_group("quaternion8");
  const auto q = build_quotient(g, labelled(*g, {"1", "-1"}));
  EXPECT_EQ(q.order(), 4);
  EXPECT_EQ(q.at("iN"), q.at("-iN"));
  EXPECT_EQ(q.coset_members(q.at("iN")), labelled(*g, {"i", "-i"}));
  EXPECT_TRUE(q.group().is_abelian());
  EXPECT_EQ(q.group().label(kIdentity), "N");
}

TEST(Quotient, TableAgreesWithParent) {
  for (const char* name : {"symmetric4", "dihedral6", "alternating4", "direct_product(cyclic2,cyclic4)"}) {
    const auto g = builtin_group(name);
    for (const auto& n : normal_subgroups(*g)) {
      const auto q = build_quotient(g, n);
      EXPECT_EQ(q.order() * n.size(), g->order());
      EXPECT_TRUE(oracle::axioms_hold(q.group().table())) << name;
      for (Element x = 0; x < g->order(); ++x)
        for (Element y = 0; y < g->order(); ++y)
          ASSERT_EQ(q.group().mul(q.coset_of(x), q.coset_of(y)), q.coset_of(g->mul(x, y)));
    }
  }
}

TEST(Quotient, SymmetricOverAlternating) {
  const auto g = builtin_group("symmetric4");
  const auto q = build_quotient(g, support::a4_in(*g));
  EXPECT_EQ(q.order(), 2);
  const auto trivial = build_quotient(g, ElementSet::identity(*g));
  EXPECT_EQ(trivial.order(), 24);
  EXPECT_TRUE(are_isomorphic(trivial.group_ptr(), g));
}

TEST(ProjectLift, RoundTripOnSaturatedSets) {
  const auto g = builtin_group("symmetric4");
  const ElementSet n = support::v4_in(*g);
  const auto q = build_quotient(g, n);
  const ElementSet h = labelled(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(1324)"});
  const ElementSet p = project_subset(q, h);
  ElementSet expect(q.group());
  expect.insert(q.at("N"));
  expect.insert(q.at("(1324)N"));
  EXPECT_EQ(p, expect);
  EXPECT_EQ(project_subset(q, lift_subset(q, p)), p);
  EXPECT_EQ(lift_subset(q, p).size(), 8);
  EXPECT_THROW(project_subset(q, labelled(*g, {"I", "(12)"})), MissingKernel);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    ElementSet s(q.group());
    for (Element c = 0; c < q.order(); ++c)
      if (rng() & 1u) s.insert(c);
    s.insert(kIdentity);
    EXPECT_EQ(project_subset(q, lift_subset(q, s)), s);
  }
}

TEST(ProjectLift, UnionsCommute) {
  const auto g = builtin_group("symmetric4");
  const auto q = build_quotient(g, support::v4_in(*g));
  const ElementSet h1 = labelled(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(1324)"});
  const ElementSet h2 = labelled(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(3412)", "(1243)"});
  EXPECT_EQ(project_subset(q, h1 | h2), project_subset(q, h1) | project_subset(q, h2));
}

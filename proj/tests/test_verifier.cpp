#include <gtest/gtest.h>

#include "support.hpp"

using namespace roughq;
using namespace roughq::verify;
using support::labelled;

namespace {

const Shape kInstanceShapes[] = {Shape::Normal,           Shape::Subject,         Shape::SubjectPair,
                                 Shape::IntersectionPair, Shape::NormalSubject,   Shape::SubgroupSubject,
                                 Shape::SubgroupPair,     Shape::TwoNormalSubgroup, Shape::NestedSubject,
                                 Shape::NestedSubgroup,   Shape::TwoNormalJoin,   Shape::TwoNormalUnion};

bool contains_instance(const std::vector<Instance>& list, const ElementSet& n, const ElementSet& h1,
                       std::optional<ElementSet> h2 = std::nullopt, std::optional<ElementSet> m = std::nullopt) {
  for (const auto& in : list)
    if (in.n == n && in.h1 == h1 && in.h2 == h2 && in.m == m) return true;
  return false;
}

}  // namespace

TEST(Enumeration, TrivialGroupHasOneInstancePerShape) {
  const GroupContext ctx(builtin_group("trivial"));
  for (Shape s : kInstanceShapes) EXPECT_EQ(enumerate_instances(ctx, s).size(), 1u) << shape_name(s);
  EXPECT_TRUE(enumerate_instances(ctx, Shape::Example).empty());
}

TEST(Enumeration, QuaternionSubjectsMatchBruteForce) {
  const auto g = builtin_group("quaternion8");
  std::size_t expected = 0, expected_subgroups = 0;
  const auto subs = oracle::subgroups_by_power_set(*g);
  for (const auto& n : subs) {
    if (!oracle::normal(*g, n)) continue;
    for (unsigned mask = 0; mask < 256; ++mask) {
      oracle::Set h;
      for (int i = 0; i < 8; ++i)
        if ((mask >> i) & 1u) h.insert(i);
      if (std::includes(h.begin(), h.end(), n.begin(), n.end()) && oracle::product(*g, h, n) == h) ++expected;
    }
    for (const auto& h : subs) expected_subgroups += std::includes(h.begin(), h.end(), n.begin(), n.end());
  }
  const GroupContext ctx(g);
  EXPECT_EQ(ctx.normals().size(), 6u);
  EXPECT_EQ(enumerate_instances(ctx, Shape::Subject).size(), expected);
  EXPECT_EQ(expected, 143u);
  EXPECT_EQ(enumerate_instances(ctx, Shape::SubgroupSubject).size(), expected_subgroups);
  EXPECT_EQ(enumerate_instances(ctx, Shape::SubjectPair).size(), 128u * 128 + 8 * 8 + 3 * 2 * 2 + 1);
}

TEST(Enumeration, SymmetricFourCoversKnownInstances) {
  const auto g = builtin_group("symmetric4");
  const GroupContext ctx(g);
  const ElementSet v4 = support::v4_in(*g), a4 = support::a4_in(*g);
  EXPECT_TRUE(contains_instance(enumerate_instances(ctx, Shape::NestedSubgroup), v4, a4, std::nullopt, a4));
  const ElementSet h22 = labelled(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(1423)"});
  EXPECT_TRUE(contains_instance(enumerate_instances(ctx, Shape::SubgroupSubject), v4, h22));
}

TEST(Enumeration, DeterministicAcrossRuns) {
  EnumerationOptions opt;
  opt.seed = 11;
  const GroupContext ctx(builtin_group("symmetric4"));
  const auto a = enumerate_instances(ctx, Shape::Subject, opt);
  const auto b = enumerate_instances(ctx, Shape::Subject, opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i].h1, b[i].h1);
}

TEST(Check, SingleStatements) {
  const auto g = builtin_group("symmetric4");
  const GroupContext ctx(g);
  const ElementSet v4 = support::v4_in(*g), a4 = support::a4_in(*g);
  EXPECT_EQ(check("Lemma6", make_instance(ctx, Shape::NormalSubject, v4, a4)).verdict, Verdict::Pass);

  const ApproximationSpace& a = ctx.space(v4);
  const QuotientGroup& q = a.quotient();
  auto lift = [&](std::initializer_list<std::string_view> cosets) {
    ElementSet s(q.group());
    for (auto c : cosets) s.insert(q.at(c));
    return lift_subset(q, s);
  };
  const Instance ex13 = make_instance(ctx, Shape::SubjectPair, v4, lift({"N", "(1324)N"}),
                                      lift({"N", "(1234)N", "(1243)N"}));
  const CheckReport r = check("Thm3.2", ex13);
  EXPECT_EQ(r.verdict, Verdict::Strict);
  EXPECT_EQ(r.instance["N"].size(), 4u);
}

TEST(Check, Errors) {
  const auto g = builtin_group("symmetric4");
  const GroupContext ctx(g);
  const ElementSet v4 = support::v4_in(*g);
  const Instance plain = make_instance(ctx, Shape::Subject, v4, v4);
  EXPECT_THROW(check("Thm3.2", plain), ShapeMismatch);
  const ElementSet h22 = v4 | labelled(*g, {"(12)", "(34)", "(1324)", "(1423)"});
  EXPECT_THROW(check("Lemma6", make_instance(ctx, Shape::Subject, v4, h22)), ShapeMismatch);
  EXPECT_THROW(check("Lemma99", plain), UnknownStatement);
  EXPECT_THROW(hunt("no-such-property", {g}), UnknownProperty);
}

TEST(Suite, SmallCorpusHasNoFailures) {
  const auto r = run_suite(std::vector<std::string>{"symmetric3", "dihedral4", "quaternion8"}, {"all"});
  EXPECT_EQ(r.failures(), 0) << to_json(r).dump(2);
  EXPECT_EQ(r.statements.size(), 34u);
  for (const auto& s : r.statements) EXPECT_GT(s.total(), 0) << s.id;
}

TEST(Suite, ReportsAreReproducible) {
  EnumerationOptions opt;
  opt.seed = 5;
  const std::vector<std::string> corpus{"dihedral6", "alternating4"};
  const auto a = to_json(run_suite(corpus, {"all"}, opt)).dump(2);
  const auto b = to_json(run_suite(corpus, {"all"}, opt)).dump(2);
  EXPECT_EQ(a, b);
}

TEST(Suite, StatementSelection) {
  EXPECT_EQ(select_statements({}).size(), 34u);
  EXPECT_EQ(select_statements({"examples"}).size(), 4u);
  EXPECT_EQ(select_statements({"Lemma1", "Thm19"}).size(), 2u);
  EXPECT_THROW(select_statements({"Thm100"}), UnknownStatement);
}

TEST(Golden, ExamplesOtherThanThirteenMatch) {
  for (const char* id : {"ExampleQ8", "Example22", "ExampleA4"}) {
    const CheckReport r = check_example(find_statement(id));
    EXPECT_EQ(r.verdict, Verdict::Pass) << id << " " << r.witness.dump();
  }
}

// The printed (H1H2)/N equals (H1/N) ∪ (H2/N), but the set product covers all
// six cosets of S4/V4; exactly the claims about it disagree.
TEST(Golden, ExampleThirteenDisagreesOnlyOnTheProduct) {
  const CheckReport r = check_example(find_statement("Example13"));
  ASSERT_EQ(r.verdict, Verdict::Fail);
  std::vector<std::string> violated;
  for (const auto& [k, v] : r.witness["violated"].items()) violated.push_back(k);
  EXPECT_EQ(violated, (std::vector<std::string>{"(H1H2)/N", "lower((H1H2)/N)"}));
  EXPECT_EQ(r.witness["computed (H1H2)/N"].size(), 6u);
}

TEST(Hunt, Witnesses) {
  const auto s4 = builtin_group("symmetric4");
  const ElementSet v4 = support::v4_in(*s4);
  const ElementSet h22 = labelled(*s4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(1423)"});
  bool saw22 = false;
  for (const auto& w : hunt("upper-not-subgroup", {s4}))
    saw22 |= w.instance["N"] == labels_of(v4) && w.instance["H1"] == labels_of(h22);
  EXPECT_TRUE(saw22);

  const auto a4 = builtin_group("alternating4");
  const ElementSet h1 = labelled(*a4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(123)", "(124)"});
  const ElementSet h2 = labelled(*a4, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(132)", "(142)"});
  bool saw_pair = false;
  for (const auto& w : hunt("cor12-fails-without-subgroups", {a4}))
    saw_pair |= w.instance["H1"] == labels_of(h1) && w.instance["H2"] == labels_of(h2);
  EXPECT_TRUE(saw_pair);

  EXPECT_TRUE(hunt("upper-not-subgroup", {builtin_group("cyclic12"), builtin_group("klein4")}).empty());
  EXPECT_EQ(hunt("lower-union-strict", {s4}, hunt_options(), 3).size(), 3u);
}

TEST(Hunt, SmallestGroupFirst) {
  const auto w = hunt("upper-not-subgroup", {builtin_group("symmetric4"), builtin_group("symmetric3")});
  ASSERT_FALSE(w.empty());
  EXPECT_EQ(w.front().group, builtin_group("symmetric3")->name());
}

#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace roughq;
using support::labelled;

TEST(Hom, IdentityIsValid) {
  const auto g = builtin_group("dihedral4");
  std::vector<Element> id(g->order());
  std::iota(id.begin(), id.end(), 0);
  const GroupHom h = make_hom(g, g, id);
  EXPECT_EQ(h.kernel(), ElementSet::identity(*g));
  EXPECT_TRUE(h.is_isomorphism());
}

TEST(Hom, SwapInCyclicThreeIsNotAHom) {
  const auto z3 = builtin_group("cyclic3");
  try {
    make_hom(z3, z3, {0, 2, 1 + 0 * 1});
  } catch (...) {
  }
  // 0 -> 0, 1 -> 1, 2 -> 2 would be the identity; swapping 1 and 2 is
  // negation, which is an automorphism of Z3. Swapping a non-identity element
  // with the identity is the real failure case.
  EXPECT_THROW(make_hom(z3, z3, {1, 0, 2}), NotHomomorphism);
  EXPECT_THROW(make_hom(z3, z3, {0, 1}), NotHomomorphism);
}

TEST(Hom, QuaternionsOntoSignGroup) {
  // Q8 -> Q8/{±1} -> (Q8/{±1})/<iN>, a map onto a group of order two.
  const auto q8 = builtin_group("quaternion8");
  const GroupHom p1 = natural_projection(q8, labelled(*q8, {"1", "-1"}));
  const auto& mid = p1.target_ptr();
  const GroupHom p2 = natural_projection(mid, labelled(*mid, {"N", "iN"}));
  const GroupHom onto = compose(p2, p1);
  EXPECT_EQ(onto.target().order(), 2);
  EXPECT_TRUE(onto.is_surjective());
  EXPECT_EQ(onto.kernel(), labelled(*q8, {"1", "-1", "i", "-i"}));
}

TEST(Hom, NaturalProjection) {
  const auto g = builtin_group("symmetric4");
  const GroupHom p = natural_projection(g, support::v4_in(*g));
  EXPECT_EQ(p.kernel(), support::v4_in(*g));
  EXPECT_TRUE(p.is_surjective());
  EXPECT_TRUE(natural_projection(g, ElementSet::identity(*g)).is_isomorphism());
  EXPECT_EQ(natural_projection(g, ElementSet::full(*g)).target().order(), 1);
  EXPECT_THROW(natural_projection(g, labelled(*g, {"I", "(12)"})), NotNormal);
}

TEST(Hom, KernelsAreNormal) {
  const auto g = builtin_group("dihedral6");
  for (const auto& n : normal_subgroups(*g)) {
    const GroupHom p = natural_projection(g, n);
    EXPECT_TRUE(is_normal(p.kernel()));
    EXPECT_EQ(p.image().size(), p.target().order());
  }
}

TEST(Refinement, KleinInsideAlternating) {
  const auto g = builtin_group("symmetric4");
  const GroupHom f = refinement_hom(g, support::v4_in(*g), support::a4_in(*g));
  EXPECT_EQ(f.source().order(), 6);
  EXPECT_EQ(f.target().order(), 2);
  EXPECT_EQ(f.kernel().size(), 3);
  EXPECT_TRUE(f.is_surjective());
  EXPECT_TRUE(refinement_hom(g, support::v4_in(*g), support::v4_in(*g)).is_isomorphism());
  EXPECT_THROW(refinement_hom(g, support::a4_in(*g), support::v4_in(*g)), NotNested);
}

TEST(Isomorphism, SearchAgreesWithBijections) {
  const char* names[] = {"cyclic4", "klein4", "cyclic6", "symmetric3", "dihedral4", "quaternion8",
                         "direct_product(cyclic2,cyclic4)", "cyclic8"};
  for (const char* a : names)
    for (const char* b : names) {
      const auto ga = builtin_group(a), gb = builtin_group(b);
      if (ga->order() != gb->order()) continue;
      const auto iso = find_isomorphism(ga, gb);
      EXPECT_EQ(iso.has_value(), oracle::isomorphic_by_bijection(*ga, *gb)) << a << " vs " << b;
      if (iso) {
        EXPECT_TRUE(iso->is_isomorphism());
      }
    }
}

TEST(Theorem8, KleinAlternatingAlternating) {
  const auto g = builtin_group("symmetric4");
  const ElementSet v4 = support::v4_in(*g), a4 = support::a4_in(*g);
  const Theorem8Data d = theorem8_data(g, v4, a4, a4);
  EXPECT_EQ(d.K, a4);
  EXPECT_EQ(d.T, a4);
  EXPECT_EQ(d.psi1.source().order(), 2);
  EXPECT_TRUE(d.psi1.is_isomorphism());
  EXPECT_TRUE(d.psi2.is_isomorphism());
  EXPECT_EQ(d.phi.source().order(), 3);
  EXPECT_EQ(d.phi.target().order(), 1);
  EXPECT_EQ(d.phi.kernel(), d.m_over_n);
  EXPECT_EQ(d.m_over_n.size(), 3);
  ASSERT_TRUE(d.k_over_m_iso.has_value());
}

TEST(Theorem8, EqualNormalSubgroups) {
  const auto g = builtin_group("symmetric4");
  const ElementSet v4 = support::v4_in(*g);
  const ElementSet h = labelled(*g, {"I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(1423)"});
  const Theorem8Data d = theorem8_data(g, v4, v4, h);
  EXPECT_EQ(d.K, d.T);
  EXPECT_TRUE(d.phi.is_isomorphism());
  EXPECT_EQ(d.m_over_n.size(), 1);
}

TEST(Theorem8, DihedralCenter) {
  const auto g = builtin_group("dihedral4");
  const ElementSet e = ElementSet::identity(*g);
  const ElementSet center = labelled(*g, {"e", "r^2"});
  const ElementSet rotations = labelled(*g, {"e", "r", "r^2", "r^3"});
  const Theorem8Data d = theorem8_data(g, e, center, rotations);
  EXPECT_EQ(d.K, rotations);
  EXPECT_EQ(d.T, rotations);
  EXPECT_TRUE(d.phi.is_surjective());
  EXPECT_EQ(d.phi.kernel().size(), 2);
  EXPECT_EQ(d.phi.kernel(), d.m_over_n);
}

TEST(Theorem8, Preconditions) {
  const auto g = builtin_group("symmetric4");
  const ElementSet v4 = support::v4_in(*g), a4 = support::a4_in(*g);
  EXPECT_THROW(theorem8_data(g, a4, v4, a4), NotNested);
  EXPECT_THROW(theorem8_data(g, v4, a4, v4 | labelled(*g, {"(12)"})), NotSubgroupH);
  EXPECT_THROW(theorem8_data(g, v4, a4, v4), PreconditionM);
}

TEST(CorollaryChain, EqualNormalSubgroupsGiveIsomorphisms) {
  const auto g = builtin_group("dihedral6");
  for (const auto& n : normal_subgroups(*g)) {
    const CorollaryChain c = corollary_chain(g, n, n, ElementSet::full(*g));
    EXPECT_TRUE(c.alpha.is_isomorphism());
    EXPECT_TRUE(c.beta.is_isomorphism());
    EXPECT_TRUE(c.gamma.is_isomorphism());
  }
}

TEST(CorollaryChain, SymmetricFour) {
  const auto g = builtin_group("symmetric4");
  const ElementSet v4 = support::v4_in(*g), a4 = support::a4_in(*g);
  const CorollaryChain c = corollary_chain(g, v4, a4, a4);
  EXPECT_TRUE(c.alpha.is_isomorphism());
  EXPECT_EQ(c.beta.kernel().size(), 3);
  EXPECT_EQ(c.beta.kernel(), c.beta_kernel_expected);
  EXPECT_EQ(compose(c.beta, c.alpha).map(), c.gamma.map());
}

TEST(CorollaryChain, CyclicTwelve) {
  const auto g = builtin_group("cyclic12");
  const ElementSet n = labelled(*g, {"0", "4", "8"});
  const ElementSet m = labelled(*g, {"0", "6"});
  const CorollaryChain c = corollary_chain(g, n, m, ElementSet::full(*g));
  // Abelian, so every lower approximation is the whole quotient.
  EXPECT_EQ(c.alpha.source().order(), 12);
  EXPECT_EQ(c.alpha.kernel().size(), 3);
  EXPECT_EQ(c.beta.kernel().size(), 2);
  EXPECT_EQ(c.gamma.kernel().size(), 6);
  for (const GroupHom* h : {&c.alpha, &c.beta, &c.gamma}) EXPECT_TRUE(h->is_surjective());
}

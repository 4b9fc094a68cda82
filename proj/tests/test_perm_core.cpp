#include <gtest/gtest.h>

#include "residua/errors.hpp"
#include "residua/group.hpp"
#include "residua/oracle.hpp"
#include "test_support.hpp"

using namespace residua;
using residua::test::perm;

TEST(Permutation, ParsesAndInverts) {
  Permutation p = perm("(0 1 2)(3 4)", 5);
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[2], 0);
  EXPECT_EQ(p.element_order(), 6u);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.to_cycles(false), "(0 1 2)(3 4)");
  EXPECT_EQ(Permutation::from_cycles("(1 2 3)(4 5)", 5), p);
}

TEST(Permutation, ComposesLeftToRight) {
  Permutation a = perm("(0 1)", 3), b = perm("(1 2)", 3);
  // a first: 0 -> 1 -> 2
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_EQ(conjugate(a, b), b.inverse() * a * b);
  EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), InputError);
  EXPECT_THROW(perm("(0 5)", 3), InputError);
  EXPECT_THROW(perm("(0 1 0)", 3), InputError);
}

TEST(BsgsBuild, SymmetricAndAlternatingOrders) {
  Group s5 = Group::generate({perm("(0 1)", 5), perm("(0 1 2 3 4)", 5)}, 5);
  EXPECT_EQ(s5.order(), 120);
  Group a5 = Group::generate({perm("(0 1 2 3 4)", 5), perm("(2 3 4)", 5)}, 5);
  EXPECT_EQ(a5.order(), 60);
  EXPECT_EQ(Group::generate({}, 4).order(), 1);
  EXPECT_EQ(Group::alternating(6).order(), 360);
  EXPECT_EQ(Group::symmetric(7).order(), 5040);
}

TEST(BsgsBuild, Errors) {
  EXPECT_THROW(Group::generate({perm("(0 1)", 3), perm("(0 1)", 4)}, 3), InputError);
  EXPECT_THROW(Group::generate({}, 0), InputError);
  EXPECT_THROW(Group::generate({}, 100), CapExceeded);
}

TEST(BsgsBuild, OrderMatchesEnumeration) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Group s = Group::symmetric(n);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(enumerate_elements(s).size())), s.order());
  }
}

TEST(Contains, Examples) {
  Group a5 = Group::alternating(5);
  EXPECT_TRUE(a5.contains(perm("(0 1 2)", 5)));
  EXPECT_FALSE(a5.contains(perm("(0 1)", 5)));
  Group s4 = Group::generate({perm("(0 1)", 5), perm("(0 1 2 3)", 5)}, 5);
  EXPECT_EQ(s4.order(), 24);
  EXPECT_FALSE(s4.contains(perm("(0 4)", 5)));
  EXPECT_THROW(a5.contains(perm("(0 1)", 4)), InputError);
}

TEST(NormalClosure, Examples) {
  Group s5 = Group::symmetric(5);
  Group n = normal_closure(s5, {perm("(0 1 2)", 5)});
  EXPECT_EQ(n.order(), 60);
  EXPECT_TRUE(n.same_as(Group::alternating(5)));
  EXPECT_TRUE(normal_closure(s5, {identity(5)}).is_trivial());
  Group a5a5 = direct_product(Group::alternating(5), Group::alternating(5));
  Group first = normal_closure(a5a5, {perm("(0 1 2)", 10)});
  EXPECT_EQ(first.order(), 60);
  EXPECT_THROW(normal_closure(Group::alternating(5), {perm("(0 1)", 5)}), InputError);
}

TEST(DerivedSubgroup, Examples) {
  EXPECT_EQ(derived_subgroup(Group::symmetric(4)).order(), 12);
  EXPECT_TRUE(derived_subgroup(Group::cyclic(12)).is_trivial());
  EXPECT_EQ(derived_subgroup(wreath_product(Group::symmetric(5), Group::symmetric(2))).order(), 7200);
}

TEST(Series, DerivedAndLowerCentral) {
  auto d = derived_series(Group::symmetric(4));
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[0].order(), 24);
  EXPECT_EQ(d[1].order(), 12);
  EXPECT_EQ(d[2].order(), 4);
  EXPECT_EQ(d[3].order(), 1);
  auto l = lower_central_series(Group::symmetric(4));
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l.back().order(), 12);
  auto p = derived_series(Group::alternating(5));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(is_perfect(Group::alternating(5)));
  EXPECT_TRUE(is_soluble(Group::symmetric(4)));
  EXPECT_FALSE(is_nilpotent(Group::symmetric(3)));
}

TEST(Products, DirectAndWreath) {
  Group s3 = Group::symmetric(3);
  Group d = direct_product(s3, Group::cyclic(4));
  EXPECT_EQ(d.degree(), 7u);
  EXPECT_EQ(d.order(), 24);
  Group w = wreath_product(Group::symmetric(5), Group::symmetric(2));
  EXPECT_EQ(w.degree(), 10u);
  EXPECT_EQ(w.order(), 28800);
  EXPECT_EQ(wreath_base(Group::symmetric(5), 2).order(), 14400);
  EXPECT_TRUE(is_transitive(w));
  EXPECT_FALSE(is_primitive(w));
  Group c2 = Group::cyclic(2);
  EXPECT_EQ(wreath_product(wreath_product(c2, c2), c2).order(), 128);
}

TEST(Primitivity, SmallGroups) {
  EXPECT_TRUE(is_primitive(Group::symmetric(5)));
  EXPECT_FALSE(is_primitive(Group::cyclic(4)));
  EXPECT_TRUE(is_primitive(Group::cyclic(5)));
}

TEST(Centre, Examples) {
  EXPECT_TRUE(center(Group::symmetric(4)).is_trivial());
  EXPECT_EQ(center(Group::cyclic(6)).order(), 6);
  EXPECT_EQ(center(residua::test::corpus_group("Q8")).order(), 2);
}

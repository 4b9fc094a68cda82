#include <gtest/gtest.h>

#include "residua/constants.hpp"
#include "residua/errors.hpp"
#include "residua/oracle.hpp"
#include "residua/res_rad.hpp"
#include "residua/suites.hpp"
#include "test_support.hpp"

using namespace residua;
using residua::test::corpus_group;

namespace {

const GroupClass ab = GroupClass::abelian();
const GroupClass nil = GroupClass::nilpotent();
const GroupClass sol = GroupClass::soluble();

CertifiedBounds gamma_nilpotent() {
  static const CertifiedBounds b =
      compute_lambda_gamma(GroupClass::parse("poly:nilpotent"), RadicalValue{24, 3}, bundled_simple_table()).gamma_bounds;
  return b;
}

std::vector<BigInt> orders(const std::vector<Group>& tower) {
  std::vector<BigInt> out;
  for (const auto& g : tower) out.push_back(g.order());
  return out;
}

}  // namespace

TEST(Residual, Examples) {
  EXPECT_TRUE(residual(Group::symmetric(5), ab).subgroup.same_as(Group::alternating(5)));
  EXPECT_EQ(residual(Group::alternating(5), sol).subgroup.order(), 60);
  Group w = corpus_group("S5wrC2");
  auto r = residual(w, sol);
  EXPECT_EQ(r.subgroup.order(), 3600);
  EXPECT_TRUE(r.subgroup.same_as(residual_generic(w, sol).subgroup));
}

TEST(Residual, GenericD0xS) {
  auto r = residual(Group::symmetric(5), GroupClass::parse("d0xS:A5"));
  EXPECT_EQ(r.subgroup.order(), 60);
  EXPECT_EQ(residual(Group::alternating(6), GroupClass::parse("d0xS:A5")).subgroup.order(), 360);
  auto q = residual(corpus_group("A5xC6"), GroupClass::parse("d0xS:A5"));
  EXPECT_TRUE(q.subgroup.is_trivial());
  Caps small;
  small.element = 1000;
  EXPECT_THROW(residual(corpus_group("S5wrC2"), GroupClass::parse("d0xS:A5"), small), Error);
}

TEST(PolyResidual, Examples) {
  auto s4 = poly_residual(Group::symmetric(4), nil);
  EXPECT_TRUE(s4.subgroup.is_trivial());
  EXPECT_EQ(orders(s4.tower), (std::vector<BigInt>{24, 12, 4, 1}));
  auto w = poly_residual(corpus_group("S5wrC2"), nil);
  EXPECT_EQ(w.subgroup.order(), 3600);
  EXPECT_EQ(w.cls.descriptor(), "poly:nilpotent");
  auto a6 = poly_residual(Group::alternating(6), GroupClass::parse("d0xS:A5"));
  EXPECT_EQ(a6.subgroup.order(), 360);
  for (const auto& g : oracle_corpus()) {
    const Group s = residual(g.group, sol).subgroup;
    EXPECT_TRUE(poly_residual(g.group, ab).subgroup.same_as(s)) << g.name;
    EXPECT_TRUE(poly_residual(g.group, nil).subgroup.same_as(s)) << g.name;
  }
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(Group::symmetric(4), nil).subgroup.order(), 4);
  EXPECT_TRUE(radical(Group::alternating(5), sol).subgroup.is_trivial());
  EXPECT_EQ(radical(corpus_group("S5wrC2"), GroupClass::parse("d0xS:A5")).subgroup.order(), 3600);
  EXPECT_TRUE(radical(Group::alternating(6), GroupClass::parse("d0xS:A5")).subgroup.is_trivial());
}

TEST(PolyRadical, Examples) {
  EXPECT_EQ(poly_radical(Group::symmetric(4), nil).subgroup.order(), 24);
  auto r = poly_radical(corpus_group("A5xC6"), nil);
  EXPECT_EQ(r.subgroup.order(), 6);
  for (const auto& t : r.tower) EXPECT_TRUE(is_normal_in(t, corpus_group("A5xC6")));
  EXPECT_TRUE(poly_radical(Group::alternating(6), GroupClass::parse("d0xS:A5")).subgroup.is_trivial());
  EXPECT_EQ(poly_radical(corpus_group("S5wrC2"), GroupClass::parse("d0xS:A5")).subgroup.order(), 28800);
}

TEST(Radical, MonotoneAndMembership) {
  for (const auto& g : oracle_corpus()) {
    if (g.group.order() > 1000) continue;
    Oracle o(g.group);
    const Subgroup rn = o.subgroup(radical(g.group, nil).subgroup);
    const Subgroup rs = o.subgroup(radical(g.group, sol).subgroup);
    EXPECT_TRUE(rn.set.subset_of(rs.set)) << g.name;
    EXPECT_EQ(rs.order() == o.size(), member(sol, g.group)) << g.name;
    const Subgroup s = o.subgroup(residual(g.group, sol).subgroup);
    const Subgroup n = o.subgroup(residual(g.group, nil).subgroup);
    const Subgroup a = o.subgroup(residual(g.group, ab).subgroup);
    EXPECT_TRUE(s.set.subset_of(n.set) && n.set.subset_of(a.set)) << g.name;
  }
}

TEST(MainInequality, Examples) {
  const CertifiedBounds gamma = gamma_nilpotent();
  auto a5 = main_inequality_check(Group::alternating(5), nil, gamma, "A5");
  EXPECT_EQ(a5.verdict, Verdict::pass);
  EXPECT_EQ(a5.residual_order, 60);
  auto w = main_inequality_check(corpus_group("S5wrC2"), nil, gamma, "S5wrC2");
  EXPECT_EQ(w.verdict, Verdict::pass);
  EXPECT_EQ(w.residual_order, 3600);
  auto s4 = main_inequality_check(Group::symmetric(4), nil, gamma, "S4");
  EXPECT_EQ(s4.verdict, Verdict::hypothesis_not_met);
  auto one = main_inequality_check(Group::trivial(2), nil, gamma, "1");
  EXPECT_EQ(one.verdict, Verdict::hypothesis_not_met);
}

TEST(MainInequality, FailsForLargeExponent) {
  // |A5^S| = 60 is not above 60^1.
  CertifiedBounds one{Fraction{1, 1}, Fraction{1, 1}};
  EXPECT_EQ(main_inequality_check(Group::alternating(5), nil, one, "A5").verdict, Verdict::fail);
}

TEST(FrattiniBound, Examples) {
  auto s3 = frattini_bound_check(Group::symmetric(3));
  ASSERT_TRUE(s3.hypothesis_met);
  EXPECT_EQ(s3.derived_order, 3);
  EXPECT_EQ(s3.center_index, 6);
  EXPECT_TRUE(s3.abelian_bound_holds && s3.nilpotent_bound_holds);
  EXPECT_FALSE(s3.abelian_bound_equal || s3.nilpotent_bound_equal);
  EXPECT_TRUE(s3.equality_consistent);
  auto v4 = frattini_bound_check(corpus_group("C2xC2"));
  ASSERT_TRUE(v4.hypothesis_met);
  EXPECT_TRUE(v4.abelian_bound_equal && v4.nilpotent_bound_equal && v4.equality_consistent);
  EXPECT_FALSE(frattini_bound_check(corpus_group("Q8")).hypothesis_met);
}

#include <gtest/gtest.h>

#include "residua/errors.hpp"
#include "residua/sharpness.hpp"
#include "test_support.hpp"

using namespace residua;

namespace {

const SimpleGroupRecord& rec(const char* name) { return *bundled_simple_table().find(name); }
double as_double(const Real& r) { return r.convert_to<double>(); }

}  // namespace

TEST(Tower, Orders) {
  EXPECT_EQ(build_L_tower(Group::symmetric(4), 1).order(), 24);
  Group t2 = build_L_tower(Group::symmetric(4), 2);
  EXPECT_EQ(t2.degree(), 16u);
  EXPECT_EQ(t2.order(), 7962624);
  Group c = build_L_tower(Group::symmetric(2), 3);
  EXPECT_EQ(c.degree(), 8u);
  EXPECT_EQ(c.order(), 128);
  EXPECT_THROW(build_L_tower(Group::symmetric(4), 4), CapExceeded);
  EXPECT_THROW(build_L_tower(Group::symmetric(4), 0), InputError);
}

TEST(GammaR, Formula) {
  const auto& a5 = rec("A5");
  EXPECT_NEAR(as_double(gamma_limit(a5, 24, 4)), 0.700265861, 1e-9);
  const Real g4 = gamma_r(a5, 24, 4, 4);
  const Real direct = log(Real(60)) / log(Real(120) * pow(Real(24), Real(1) / Real(4)));
  EXPECT_NEAR(as_double(g4 - direct), 0.0, 1e-30);
  EXPECT_GT(g4, gamma_limit(a5, 24, 4));
  EXPECT_NEAR(as_double(gamma_limit(rec("A6"), 120, 5)), 0.694995, 1e-6);
  EXPECT_THROW(gamma_r(a5, 24, 4, 8), InputError);
  EXPECT_THROW(gamma_r(a5, 24, 4, 1), InputError);
}

TEST(Convergence, Nilpotent) {
  const auto& a5 = rec("A5");
  SharpnessConfig cfg{a5, 24, 4, gamma_limit(a5, 24, 4)};
  auto r = convergence_report(cfg, big_pow(4, 10));
  EXPECT_EQ(r.gamma_sequence.size(), 10u);
  EXPECT_TRUE(r.strictly_decreasing);
  EXPECT_TRUE(r.above_limit);
  EXPECT_TRUE(r.limit_ok);
  EXPECT_LT(as_double(boost::multiprecision::abs(r.gamma_sequence.back().gamma - Real("0.700265861"))), 1e-6);
}

TEST(Convergence, D0xS) {
  const auto& a6 = rec("A6");
  SharpnessConfig cfg{a6, 120, 5, gamma_limit(a6, 120, 5)};
  auto r = convergence_report(cfg, big_pow(5, 10));
  EXPECT_TRUE(r.strictly_decreasing && r.limit_ok);
}

TEST(Instance, S5WreathC2) {
  for (const auto& x : {GroupClass::nilpotent(), GroupClass::soluble()}) {
    auto c = verify_sharpness_instance(Group::symmetric(5), Group::symmetric(2), x, rec("A5"), 2, "S5 wr C2");
    EXPECT_TRUE(c.ok()) << x.descriptor();
    EXPECT_EQ(c.residual_order, 3600);
  }
}

TEST(Instance, AutA5Alone) {
  auto c = verify_sharpness_instance(Group::symmetric(5), Group::trivial(1), GroupClass::nilpotent(), rec("A5"), 1,
                                     "S5");
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.residual_order, 60);
}

TEST(Instance, AutA6) {
  auto c = verify_sharpness_instance(residua::test::corpus_group("PGammaL2_9"), Group::trivial(1),
                                     GroupClass::parse("d0xS:A5"), rec("A6"), 1, "PGammaL(2,9)");
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.residual_order, 360);
}

#include <gtest/gtest.h>

#include "residua/constants.hpp"
#include "residua/errors.hpp"

using namespace residua;

namespace {

const PrimitiveCatalog& catalog() {
  static const PrimitiveCatalog c = load_primitive_catalog();
  return c;
}

double as_double(const Real& r) { return r.convert_to<double>(); }

}  // namespace

TEST(ConstantsClass, Aliases) {
  EXPECT_EQ(constants_class("soluble").descriptor(), "soluble");
  EXPECT_EQ(constants_class("poly:nilpotent").descriptor(), "poly:nilpotent");
  EXPECT_THROW(constants_class("nilpotent"), InputError);
  EXPECT_THROW(constants_class("all"), InputError);
}

TEST(M0, Examples) {
  EXPECT_EQ(compute_m0(GroupClass::parse("poly:nilpotent")), 5);
  EXPECT_EQ(compute_m0(GroupClass::parse("poly:d0xS:A5")), 6);
  EXPECT_EQ(compute_m0(GroupClass::poly(GroupClass::d0xS("A6", false))), 5);
}

TEST(C0, Examples) {
  EXPECT_EQ(compute_c0(5).symbolic(), "24^(1/3)");
  EXPECT_NEAR(as_double(compute_c0(5).value()), 2.8845, 1e-4);
  EXPECT_EQ(compute_c0(6).symbolic(), "120^(1/4)");
  EXPECT_NEAR(as_double(compute_c0(6).value()), 3.30975, 1e-5);
  EXPECT_EQ(compute_c0(7).symbolic(), "720^(1/5)");
  EXPECT_THROW(compute_c0(4), InputError);
  for (int m = 5; m <= 9; ++m) {
    RadicalValue c = compute_c0(m);
    EXPECT_EQ(c.base, factorial(static_cast<unsigned long>(m - 1)));
    EXPECT_EQ(c.index, static_cast<unsigned long>(m - 2));
  }
}

TEST(N0, AnalyticTailAndBounds) {
  EXPECT_EQ(analytic_tail(6), 13);
  EXPECT_GT(maroti_tail_sign(12, 6), 0);
  EXPECT_LT(maroti_tail_sign(13, 6), 0);
  EXPECT_EQ(*n0_bounds(6), (std::pair{6, 13}));
  EXPECT_EQ(*n0_bounds(10), (std::pair{10, 12}));
  EXPECT_EQ(*n0_bounds(30), (std::pair{30, 30}));
  EXPECT_FALSE(n0_bounds(5).has_value());
}

TEST(N0, Examples) {
  EXPECT_EQ(compute_n0(GroupClass::parse("poly:nilpotent"), 5, catalog()).n0, 5);
  auto r = compute_n0(GroupClass::parse("poly:d0xS:A5"), 6, catalog());
  EXPECT_EQ(r.n0, 6);
  EXPECT_EQ(r.tail.value_or(0), 13);
  EXPECT_FALSE(r.checked.empty());
  for (const auto& c : r.checked) EXPECT_FALSE(c.violates) << c.label;
  EXPECT_THROW(compute_n0(GroupClass::parse("poly:d0xS:A5"), 7, catalog()), Undecidable);
}

TEST(N0, CatalogGapIsAnError) {
  PrimitiveCatalog partial = catalog();
  partial.by_degree.erase(9);
  EXPECT_THROW(compute_n0(GroupClass::parse("poly:d0xS:A5"), 6, partial), DataError);
}

TEST(Beta, Examples) {
  auto b = compute_beta(GroupClass::parse("poly:nilpotent"), 5);
  EXPECT_EQ(b.beta.symbolic(), "24^(1/3)");
  EXPECT_EQ(b.degree, 4u);
  EXPECT_EQ(b.witness.order(), 24);
  auto two = compute_beta(GroupClass::parse("poly:nilpotent"), 2);
  EXPECT_EQ(two.beta.symbolic(), "2");
  EXPECT_THROW(compute_beta(GroupClass::parse("poly:nilpotent"), 7), Undecidable);
}

TEST(Lambda, Nilpotent) {
  const RadicalValue beta{24, 3};
  auto r = compute_lambda_gamma(GroupClass::parse("poly:nilpotent"), beta, bundled_simple_table());
  EXPECT_EQ(r.s0.name, "A5");
  EXPECT_NEAR(as_double(r.lambda), 2.33629, 1e-5);
  EXPECT_NEAR(as_double(r.gamma), 0.700265861, 1e-8);
  EXPECT_TRUE(r.tail_monotone);
  EXPECT_GE(r.gamma_bounds.upper.value(), r.gamma);
  EXPECT_LE(r.gamma_bounds.lower.value(), r.gamma);
  EXPECT_LE(r.gamma_ratio.compare_to(r.gamma_bounds.upper), 0);
  EXPECT_GE(r.gamma_ratio.compare_to(r.gamma_bounds.lower), 0);
  EXPECT_NEAR(as_double(r.gamma - r.lambda / (1 + r.lambda)), 0.0, 1e-12);
}

TEST(Lambda, RivalA6) {
  const SimpleGroupRecord* a6 = bundled_simple_table().find("A6");
  ASSERT_NE(a6, nullptr);
  EXPECT_NEAR(as_double(lambda_of(*a6, RadicalValue{24, 3})), 2.40677, 1e-5);
}

TEST(Lambda, IncompleteTable) {
  SimpleTable t = bundled_simple_table();
  t.complete_through = 1000;
  EXPECT_THROW(compute_lambda_gamma(GroupClass::parse("poly:nilpotent"), RadicalValue{24, 3}, t), DataError);
}

TEST(Kohl, Examples) {
  KohlReport k = kohl_sanity(bundled_simple_table());
  EXPECT_TRUE(k.ok());
  EXPECT_EQ(k.census_60_3960, 8u);
  SimpleTable bad = bundled_simple_table();
  for (auto& s : bad.records)
    if (s.name == "A6") s.out_order = 100;
  EXPECT_FALSE(kohl_sanity(bad).ok());
}

TEST(Constants, EndToEndD0xS) {
  ConstantsReport r = compute_constants(GroupClass::parse("poly:d0xS:A5"), Caps{}, bundled_simple_table(), catalog());
  EXPECT_EQ(r.m0, 6);
  EXPECT_EQ(r.n0.n0, 6);
  EXPECT_EQ(r.beta.beta.symbolic(), "120^(1/4)");
  EXPECT_TRUE(r.beta_equals_c0);
  EXPECT_EQ(r.lambda.s0.name, "A6");
  EXPECT_NEAR(as_double(r.lambda.lambda), 2.27864, 1e-5);
  EXPECT_NEAR(as_double(r.lambda.gamma), 0.694995, 1e-6);
}

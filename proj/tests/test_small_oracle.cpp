#include <gtest/gtest.h>

#include "residua/errors.hpp"
#include "residua/oracle.hpp"
#include "test_support.hpp"

using namespace residua;
using residua::test::corpus_group;

namespace {

std::vector<std::string> labels(const std::vector<FactorDescriptor>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.label());
  return out;
}

}  // namespace

TEST(Enumerate, Sizes) {
  EXPECT_EQ(enumerate_elements(Group::symmetric(4)).size(), 24u);
  EXPECT_EQ(enumerate_elements(Group::trivial(3)).size(), 1u);
  EXPECT_EQ(enumerate_elements(corpus_group("S5wrC2")).size(), 28800u);
  Caps small;
  small.element = 100;
  EXPECT_THROW(enumerate_elements(Group::symmetric(5), small), CapExceeded);
}

TEST(Enumerate, IdentityFirst) {
  Oracle o(Group::symmetric(4));
  EXPECT_TRUE(o.elements().front().is_identity());
  for (const auto& p : o.elements()) EXPECT_TRUE(o.group().contains(p));
}

TEST(Lattice, Counts) {
  EXPECT_EQ(Oracle(Group::symmetric(3)).all_subgroups().subgroups.size(), 6u);
  EXPECT_EQ(Oracle(Group::cyclic(7)).all_subgroups().subgroups.size(), 2u);
  EXPECT_EQ(Oracle(Group::symmetric(4)).all_subgroups().subgroups.size(), 30u);
  EXPECT_EQ(Oracle(Group::alternating(5)).all_subgroups().subgroups.size(), 59u);
  Caps small;
  small.subgroup = 100;
  EXPECT_THROW(Oracle(Group::symmetric(5), small).all_subgroups(), CapExceeded);
}

TEST(Lattice, ContainsNormalsAndFlags) {
  Oracle o(Group::symmetric(4));
  const auto& lat = o.all_subgroups();
  std::size_t normal = 0;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    EXPECT_EQ(lat.normal[i], is_normal_in(lat.subgroups[i].group, o.group()));
    normal += lat.normal[i];
    EXPECT_EQ(lat.subgroups[i].group.order(), lat.subgroups[i].order());
  }
  EXPECT_EQ(normal, o.normal_subgroups().size());
  EXPECT_EQ(lat.subgroups.front().order(), 1u);
  EXPECT_EQ(lat.subgroups.back().order(), 24u);
}

TEST(NormalSubgroups, Examples) {
  EXPECT_EQ(Oracle(Group::alternating(5)).normal_subgroups().size(), 2u);
  auto s4 = Oracle(Group::symmetric(4)).normal_subgroups();
  ASSERT_EQ(s4.size(), 4u);
  EXPECT_EQ(s4[1].order(), 4u);
  EXPECT_EQ(s4[2].order(), 12u);
  EXPECT_EQ(Oracle(Group::cyclic(6)).normal_subgroups().size(), 4u);
}

TEST(Characteristic, FrattiniCentreFitting) {
  Oracle q8(corpus_group("Q8"));
  EXPECT_EQ(q8.frattini().order(), 2u);
  EXPECT_EQ(q8.frattini().set, q8.center().set);
  Oracle s4(Group::symmetric(4));
  EXPECT_EQ(s4.center().order(), 1u);
  EXPECT_EQ(s4.fitting().order(), 4u);
  EXPECT_TRUE(is_nilpotent(s4.fitting().group));
  EXPECT_EQ(s4.frattini().order(), 1u);
  EXPECT_EQ(Oracle(Group::cyclic(8)).frattini().order(), 4u);
}

TEST(Socle, Examples) {
  Oracle a5a5(corpus_group("A5xA5"));
  EXPECT_EQ(a5a5.socle().order(), 3600u);
  EXPECT_EQ(a5a5.minimal_normal_subgroups().size(), 2u);
  auto mins = Oracle(Group::symmetric(4)).minimal_normal_subgroups();
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order(), 4u);
  EXPECT_EQ(Oracle(Group::cyclic(5)).socle().order(), 5u);
}

TEST(SolubleRadical, Tower) {
  Oracle o(corpus_group("A5xC6"));
  EXPECT_EQ(o.soluble_radical().order(), 6u);
  Oracle s4(Group::symmetric(4));
  auto tower = s4.soluble_radical_tower();
  EXPECT_EQ(tower.back().order(), 24u);
}

TEST(CompositionFactors, Examples) {
  auto w = composition_factors(corpus_group("S5wrC2"));
  EXPECT_EQ(labels(w), (std::vector<std::string>{"C2", "C2", "C2", "A5", "A5"}));
  EXPECT_EQ(labels(composition_factors(Group::cyclic(12))), (std::vector<std::string>{"C2", "C2", "C3"}));
  EXPECT_EQ(labels(composition_factors(Group::alternating(5))), (std::vector<std::string>{"A5"}));
  EXPECT_EQ(labels(composition_factors(corpus_group("SL2_5"))), (std::vector<std::string>{"C2", "A5"}));
  // Giant recognition beyond the element cap.
  EXPECT_EQ(labels(composition_factors(Group::symmetric(9))), (std::vector<std::string>{"C2", "A9"}));
}

TEST(CompositionFactors, OrderProduct) {
  for (const char* name : {"S4", "PGL2_7", "A4xC5", "GL2_3", "A5wrC2"}) {
    Group g = corpus_group(name);
    BigInt prod = 1;
    for (const auto& f : composition_factors(g)) prod *= f.order;
    EXPECT_EQ(prod, g.order()) << name;
  }
}

TEST(IdentifySimple, ByOrderAndFingerprint) {
  EXPECT_EQ(identify_simple(Group::alternating(5)).value(), "A5");
  EXPECT_EQ(identify_simple(Group::alternating(6)).value(), "A6");
  EXPECT_EQ(identify_simple(corpus_group("PSL2_7")).value(), "PSL(2,7)");
  EXPECT_EQ(identify_simple(Group::alternating(8)).value(), "A8");
  EXPECT_FALSE(identify_simple(61, {1, 61}).has_value());
}

TEST(PrimeFactors, Basic) {
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5}));
  EXPECT_TRUE(prime_factors(1).empty());
}

#include <gtest/gtest.h>

#include <sstream>

#include "residua/catalog.hpp"
#include "residua/errors.hpp"
#include "residua/group_io.hpp"

using namespace residua;

namespace {

const PrimitiveCatalog& catalog() {
  static const PrimitiveCatalog c = load_primitive_catalog();
  return c;
}

SimpleTable parse(const std::string& text) {
  std::istringstream in(text);
  return parse_simple_table(in);
}

}  // namespace

TEST(SimpleTable, Bundled) {
  const SimpleTable& t = bundled_simple_table();
  EXPECT_EQ(t.complete_through, 50000u);
  ASSERT_FALSE(t.records.empty());
  EXPECT_EQ(t.records.front().name, "A5");
  for (std::size_t i = 1; i < t.records.size(); ++i) EXPECT_LE(t.records[i - 1].order, t.records[i].order);
  const auto* a6 = t.find("A6");
  ASSERT_NE(a6, nullptr);
  EXPECT_EQ(a6->aut_order(), 1440u);
  EXPECT_EQ(t.with_order(20160).size(), 2u);
  EXPECT_EQ(t.find("M11")->order, 7920u);
  EXPECT_EQ(t.find("Sz(8)")->out_order, 3u);
  EXPECT_EQ(t.find("PSL(2,9)"), nullptr);
}

TEST(SimpleTable, ParseErrors) {
  EXPECT_THROW(parse("A5|60|2|1,2,3,5\n"), DataError);
  EXPECT_THROW(parse("name|order|out_order|fingerprint\nA5|60|2\n"), DataError);
  EXPECT_THROW(parse("name|order|out_order|fingerprint\nA5|sixty|2|1\n"), DataError);
  EXPECT_THROW(parse("name|order|out_order|fingerprint\nA6|360|4|1\nA5|60|2|1\n"), DataError);
  auto t = parse("@complete_through|100\nname|order|out_order|fingerprint\nA5|60|2|1,2,3,5\n");
  EXPECT_EQ(t.complete_through, 100u);
  EXPECT_EQ(t.records.at(0).fingerprint, (std::vector<std::uint64_t>{1, 2, 3, 5}));
}

TEST(PrimitiveCatalog, CountsByDegree) {
  const std::map<std::size_t, std::size_t> expected{{5, 5}, {6, 4}, {7, 7}, {8, 7},
                                                    {9, 11}, {10, 9}, {11, 8}, {12, 6}};
  for (const auto& [n, count] : expected) {
    ASSERT_TRUE(catalog().covers(n)) << n;
    EXPECT_EQ(catalog().by_degree.at(n).size(), count) << n;
  }
  EXPECT_FALSE(catalog().covers(13));
}

TEST(PrimitiveCatalog, DegreeFiveContainsF20) {
  bool found = false;
  for (const auto& e : catalog().by_degree.at(5)) found |= e.order == 20;
  EXPECT_TRUE(found);
}

TEST(Corpus, IndexOrderAndLookup) {
  auto corpus = load_corpus();
  EXPECT_EQ(corpus.size(), 59u);
  EXPECT_EQ(corpus.front().group.order(), 1);
  EXPECT_EQ(corpus_entry(corpus, "S5wrC2").group.order(), 28800);
  EXPECT_THROW(corpus_entry(corpus, "nope"), InputError);
}

TEST(GroupFile, Parse) {
  auto f = parse_group_json(Json::parse(R"j({"degree": 4, "generators": ["(1 2 3 4)", "(1 2)"], "order": 24})j"));
  EXPECT_EQ(f.group.order(), 24);
  EXPECT_EQ(f.declared_order, 24u);
  EXPECT_THROW(parse_group_json(Json::parse(R"j({"degree": 4, "generators": ["(1 2)"], "order": 24})j")), InputError);
  EXPECT_THROW(parse_group_json(Json::parse(R"j({"generators": ["(1 2)"]})j")), InputError);
  EXPECT_THROW(parse_group_json(Json::parse(R"j({"degree": 2, "generators": ["(1 5)"]})j")), InputError);
  EXPECT_THROW(read_group_file("/nonexistent.grp"), InputError);
  auto round = parse_group_json(group_to_json(f.group, "S4"));
  EXPECT_TRUE(round.group.same_as(f.group));
  EXPECT_EQ(round.name, "S4");
}

TEST(Names, Canonical) {
  EXPECT_EQ(canonical_simple_name("PSL(2,4)"), "A5");
  EXPECT_EQ(canonical_simple_name("PSL(2,5)"), "A5");
  EXPECT_EQ(canonical_simple_name("PSL(2,9)"), "A6");
  EXPECT_EQ(canonical_simple_name("PSL(3,2)"), "PSL(2,7)");
  EXPECT_EQ(canonical_simple_name("PSL(4,2)"), "A8");
  EXPECT_EQ(canonical_simple_name("M11"), "M11");
}

TEST(Names, MinimalSimple) {
  for (const char* n : {"A5", "PSL(2,7)", "PSL(2,8)", "PSL(2,13)", "PSL(2,17)", "PSL(2,27)", "PSL(3,3)", "Sz(8)",
                        "Sz(32)"})
    EXPECT_TRUE(is_minimal_simple(n)) << n;
  for (const char* n : {"A6", "A7", "PSL(2,11)", "PSL(2,19)", "PSL(2,16)", "M11", "PSU(3,3)", "PSL(2,9)"})
    EXPECT_FALSE(is_minimal_simple(n)) << n;
}

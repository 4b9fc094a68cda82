#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "residua/group.hpp"

namespace residua {

// RESIDUA_DATA if set, otherwise the source-tree data directory, otherwise the
// installed one.
std::filesystem::path data_dir();

struct SimpleGroupRecord {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t out_order = 1;
  std::vector<std::uint64_t> fingerprint;  // element orders, ascending
  std::uint64_t aut_order() const { return order * out_order; }
};

struct SimpleTable {
  std::vector<SimpleGroupRecord> records;  // ascending by order
  std::uint64_t complete_through = 0;

  const SimpleGroupRecord* find(std::string_view name) const;
  std::vector<const SimpleGroupRecord*> with_order(std::uint64_t order) const;
};

SimpleTable parse_simple_table(std::istream& in);
SimpleTable load_simple_table(const std::filesystem::path& dir = data_dir());
// Loaded once from data_dir(); read-only afterwards.
const SimpleTable& bundled_simple_table();

struct PrimitiveEntry {
  std::string label;
  std::string source;
  std::uint64_t order = 0;
  Group group;
};

struct PrimitiveCatalog {
  std::map<std::size_t, std::vector<PrimitiveEntry>> by_degree;
  bool covers(std::size_t degree) const { return by_degree.count(degree) != 0; }
};

// Every entry is regenerated and checked: recorded order, transitivity, primitivity.
PrimitiveCatalog load_primitive_catalog(const std::filesystem::path& dir = data_dir(), const Caps& caps = {});

struct CorpusEntry {
  std::string name;
  std::string note;
  std::filesystem::path file;
  Group group;
};

// Corpus in the canonical order of corpus/index.txt; recorded orders are checked.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir = data_dir(), const Caps& caps = {});
const CorpusEntry& corpus_entry(const std::vector<CorpusEntry>& corpus, std::string_view name);

// Resolves isomorphic aliases to the name used in the simple table
// (PSL(2,4) and PSL(2,5) -> A5, PSL(2,9) -> A6, PSL(3,2) -> PSL(2,7), PSL(4,2) -> A8).
std::string canonical_simple_name(std::string_view name);

// Thompson's minimal simple groups: PSL(2,2^p) p prime; PSL(2,3^p) p odd prime;
// PSL(2,p) p > 3 prime with p = 2,3 mod 5; Sz(2^p) p odd prime; PSL(3,3).
bool is_minimal_simple(std::string_view name);

}  // namespace residua

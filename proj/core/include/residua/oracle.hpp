#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "residua/catalog.hpp"
#include "residua/group.hpp"

namespace residua {

// Bitset over the element ids of one Oracle.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const;
  std::vector<std::size_t> ids() const;
  std::size_t hash() const;

  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.words_ < b.words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Subgroup {
  Group group;
  ElementSet set;
  std::size_t order() const { return set.count(); }
  bool operator==(const Subgroup& o) const { return set == o.set; }
};

struct SubgroupLattice {
  Group parent;
  std::vector<Subgroup> subgroups;  // ascending by order
  std::vector<bool> normal;
  std::vector<bool> maximal;
};

struct FactorDescriptor {
  enum class Kind { cyclic, nonabelian };
  Kind kind = Kind::cyclic;
  BigInt order = 1;
  std::optional<std::string> name;

  std::string label() const;
  friend bool operator==(const FactorDescriptor& a, const FactorDescriptor& b) {
    return a.kind == b.kind && a.order == b.order && a.name == b.name;
  }
};

bool operator<(const FactorDescriptor& a, const FactorDescriptor& b);

// Exhaustive ground truth for one group of order at most caps.element.
// Element ids follow the lexicographic order of image lists (identity is 0).
// Derived data is computed lazily and cached; an Oracle is safe to share.
class Oracle {
 public:
  explicit Oracle(const Group& g, const Caps& caps = {});

  const Group& group() const;
  const Caps& caps() const;
  std::size_t size() const;
  const std::vector<Permutation>& elements() const;
  std::optional<std::size_t> find(const Permutation& p) const;
  std::size_t id(const Permutation& p) const;

  ElementSet set_of(const Group& h) const;
  Group group_of(const ElementSet& s) const;
  Subgroup subgroup(const Group& h) const;
  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup join(const Subgroup& a, const Subgroup& b) const;
  Subgroup meet(const Subgroup& a, const Subgroup& b) const;

  const std::vector<ElementSet>& conjugacy_classes() const;
  // Ascending by order; includes 1 and G.
  const std::vector<Subgroup>& normal_subgroups() const;
  std::vector<Subgroup> minimal_normal_subgroups() const;
  Subgroup socle() const;
  Subgroup center() const;
  Subgroup fitting() const;
  // Tower 1 = R_0 < R_1 < ... with R_{i+1}/R_i the Fitting subgroup of G/R_i.
  std::vector<Subgroup> soluble_radical_tower() const;
  Subgroup soluble_radical() const;
  const SubgroupLattice& all_subgroups() const;
  Subgroup frattini() const;

 private:
  SubgroupLattice build_lattice() const;
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

std::vector<Permutation> enumerate_elements(const Group& g, const Caps& caps = {});

// Name of a nonabelian simple group from its order and element-order set;
// nullopt when nothing in the table matches.
std::optional<std::string> identify_simple(std::uint64_t order, const std::vector<std::uint64_t>& fingerprint,
                                           const SimpleTable& table = bundled_simple_table());
std::optional<std::string> identify_simple(const Group& witness, const Caps& caps = {},
                                           const SimpleTable& table = bundled_simple_table());

// Jordan-Holder factors, sorted. Soluble layers are read off the order;
// perfect layers use the oracle, or the A_k recognition when the layer has
// order k!/2 on k moved points.
std::vector<FactorDescriptor> composition_factors(const Group& g, const Caps& caps = {},
                                                  const SimpleTable& table = bundled_simple_table());

// Multiset difference a - b; throws if b is not contained in a.
std::vector<FactorDescriptor> factor_difference(const std::vector<FactorDescriptor>& a,
                                                const std::vector<FactorDescriptor>& b);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // with multiplicity, ascending

}  // namespace residua

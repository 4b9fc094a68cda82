#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "residua/bigint.hpp"
#include "residua/permutation.hpp"

namespace residua {

struct Caps {
  std::size_t degree = 64;
  std::size_t element = 50000;
  std::size_t subgroup = 1000;
};

// Stabilizer chain built by deterministic Schreier-Sims. Base points are the
// smallest points moved by the strong generator that forced each new level.
class Bsgs {
 public:
  explicit Bsgs(std::size_t degree);

  // Adds g to the generated group; returns false if g was already a member.
  bool add_generator(const Permutation& g);

  // Strips g through the chain starting at `from`; returns the residue and the
  // level where stripping stopped (levels() if it went through).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from = 0) const;
  bool contains(const Permutation& g) const;

  std::size_t degree() const { return degree_; }
  std::size_t levels() const { return levels_.size(); }
  BigInt order() const;
  std::vector<Point> base() const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  // u with base[level]^u = b, for b in the orbit.
  const Permutation& transversal(std::size_t level, Point b) const;

 private:
  struct Level {
    Point beta = 0;
    std::vector<std::size_t> gens;
    std::vector<Point> orbit;
    std::vector<int> slot;
    std::vector<Permutation> reps;
    std::vector<Permutation> inv_reps;
  };

  void rebuild(std::size_t level);
  void insert_strong(const Permutation& residue, std::size_t level);
  void complete(std::size_t start);

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

// Immutable permutation group with an exact stabilizer chain. Copies share state.
class Group {
 public:
  Group();

  static Group generate(std::vector<Permutation> generators, std::size_t degree, const Caps& caps = {});
  static Group trivial(std::size_t degree);
  static Group symmetric(std::size_t n);
  static Group alternating(std::size_t n);
  static Group cyclic(std::size_t n);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const BigInt& order() const;
  // Order as a machine integer; throws CapExceeded if it does not fit.
  std::uint64_t order_u64() const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const;
  bool is_subgroup_of(const Group& other) const;
  bool same_as(const Group& other) const;
  Permutation identity() const;
  const Bsgs& chain() const;

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl);
  friend Group from_chain(std::vector<Permutation> generators, Bsgs chain);
  std::shared_ptr<const Impl> impl_;
};

// Wraps an already completed chain without recomputation.
Group from_chain(std::vector<Permutation> generators, Bsgs chain);

// Subgroup of G generated by the given elements (degree taken from G).
Group subgroup(const Group& g, const std::vector<Permutation>& generators);
Group join(const Group& a, const Group& b);
bool is_normal_in(const Group& h, const Group& g);

Group normal_closure(const Group& g, const std::vector<Permutation>& seeds);
// [A, B] for A, B normal in G, as the normal closure in G of generator commutators.
Group commutator_subgroup(const Group& g, const Group& a, const Group& b);
Group derived_subgroup(const Group& g);
// G = D_0 > D_1 > ... ; stops at the first repeated term (which is not repeated in the list).
std::vector<Group> derived_series(const Group& g);
std::vector<Group> lower_central_series(const Group& g);
bool is_abelian(const Group& g);
bool is_nilpotent(const Group& g);
bool is_soluble(const Group& g);
bool is_perfect(const Group& g);

Group direct_product(const Group& g, const Group& h, const Caps& caps = {});
Group direct_power(const Group& g, std::size_t copies, const Caps& caps = {});
// Imprimitive action of G wr T on deg(G)*deg(T) points; block i is
// {i*m, ..., i*m + m - 1}.
Group wreath_product(const Group& g, const Group& t, const Caps& caps = {});
// The base group of wreath_product(g, t): one copy of G on every block.
Group wreath_base(const Group& g, std::size_t blocks, const Caps& caps = {});

std::vector<std::vector<Point>> orbits(const Group& g);
bool is_transitive(const Group& g);
// Requires a transitive group.
bool is_primitive(const Group& g);

// Z(G) via centralizers of the orbit actions intersected with G.
Group center(const Group& g, std::size_t enumeration_cap = 1000000);

}  // namespace residua

#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "residua/group.hpp"
#include "residua/oracle.hpp"

namespace residua {

enum class ClassKind { trivial, abelian, nilpotent, soluble, all, d0, d0xS, poly };
enum class Closure { subgroup, quotient, extension, normal_product, residual, n0 };

std::string to_string(Closure c);

// Descriptor of a class of finite groups. poly(X) is the extension closure
// (poly-X groups); d0(J) is the class of direct powers of the simple group J,
// d0xS(J) the class of groups J^k x H with H soluble.
class GroupClass {
 public:
  static GroupClass trivial();
  static GroupClass abelian();
  static GroupClass nilpotent();
  static GroupClass soluble();
  static GroupClass all();
  static GroupClass d0(std::string_view simple, bool require_minimal_simple = true);
  static GroupClass d0xS(std::string_view simple, bool require_minimal_simple = true);
  // Normalizes poly(poly X) = poly X and poly of an extension-closed
  // built-in (trivial, soluble, all) to that built-in.
  static GroupClass poly(const GroupClass& x);

  // "trivial", "abelian", "nilpotent", "soluble", "all", "d0:J", "d0xS:J", "poly:<descriptor>".
  static GroupClass parse(std::string_view descriptor);

  ClassKind kind() const { return kind_; }
  const std::string& simple() const { return simple_; }
  const GroupClass& inner() const;
  bool is_poly() const { return kind_ == ClassKind::poly; }
  std::string descriptor() const;
  std::set<Closure> declared_closures() const;

  bool admits_cyclic() const;
  bool admits_simple(std::string_view name) const;

  friend bool operator==(const GroupClass& a, const GroupClass& b) { return a.descriptor() == b.descriptor(); }

 private:
  ClassKind kind_ = ClassKind::trivial;
  std::string simple_;
  std::shared_ptr<const GroupClass> inner_;
};

GroupClass extension_closure(const GroupClass& x);

struct Characteristic {
  bool full = false;
  std::vector<std::uint64_t> primes;  // used only when not full
  std::string str() const;
};
Characteristic characteristic(const GroupClass& x);

// Membership. Abelian, nilpotent and soluble work at any scale; the others need
// composition factors or the normal-subgroup lattice and raise Undecidable when
// the group exceeds the oracle cap and no fast path applies.
bool member(const GroupClass& x, const Group& g, const Caps& caps = {});

// G/N in X for N normal in G, decided without forming the quotient.
bool section_member(const GroupClass& x, const Group& g, const Group& n, const Caps& caps = {});
bool section_member(const GroupClass& x, const Oracle& g, const Subgroup& n);

// G in poly(X) from a caller-supplied subnormal series 1 = G_0 <| G_1 <| ... <| G_r = G.
bool member_by_series(const GroupClass& x, const std::vector<Group>& series, const Caps& caps = {});

// The structural D0(J) x soluble test on the section G/N.
struct D0xSDecomposition {
  Subgroup soluble_radical;
  Subgroup semisimple_part;
  bool trivial_intersection = false;
  bool product_is_whole = false;
  bool factors_match = false;
  bool accepted() const { return trivial_intersection && product_is_whole && factors_match; }
};
D0xSDecomposition d0xs_decomposition(const Oracle& g, const Subgroup& n, std::string_view simple);

struct LawResult {
  explicit LawResult(std::string name = {}) : law(std::move(name)) {}

  std::string law;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> skip_notes;
  bool passed() const { return violations == 0; }
};

struct ClosureReport {
  std::string cls;
  std::vector<std::string> corpus;
  std::vector<LawResult> laws;
  bool passed() const;
};

struct NamedGroup {
  std::string name;
  Group group;
};

// Empirical closure laws over a corpus: direct products, subgroups (oracle
// lattices), quotients (oracle normal subgroups), extensions (normal N with N and
// G/N in the class must give G in the class, checked when the class declares it).
ClosureReport closure_property_report(const GroupClass& x, const std::vector<NamedGroup>& corpus,
                                      const Caps& caps = {});

}  // namespace residua

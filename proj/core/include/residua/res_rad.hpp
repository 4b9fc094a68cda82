#pragma once

#include <optional>
#include <string>
#include <vector>

#include "residua/exact.hpp"
#include "residua/group.hpp"
#include "residua/group_class.hpp"

namespace residua {

struct ResidualResult {
  Group subgroup;
  std::vector<Group> tower;  // strictly descending, G first, subgroup last
  GroupClass cls;
  std::string method;
};

struct RadicalResult {
  Group subgroup;
  std::vector<Group> tower;  // strictly ascending, 1 first, subgroup last
  GroupClass cls;
  std::string method;
};

// Smallest normal N with G/N in X. Fast paths for abelian (G'), nilpotent
// (lower central terminal), soluble (derived terminal); poly(Y) delegates to
// poly_residual; d0 and d0xS use the generic path.
ResidualResult residual(const Group& g, const GroupClass& x, const Caps& caps = {});
// Intersection of all oracle normal subgroups N with G/N in X.
ResidualResult residual_generic(const Group& g, const GroupClass& x, const Caps& caps = {});
// D_0 = G, D_{i+1} = residual(D_i, X) until stable.
ResidualResult poly_residual(const Group& g, const GroupClass& x, const Caps& caps = {});

// Largest normal X-subgroup. Fast paths: nilpotent (Fitting subgroup from
// normal p-subgroups), soluble (iterated Fitting tower); poly(Y) delegates to
// poly_radical.
RadicalResult radical(const Group& g, const GroupClass& x, const Caps& caps = {});
// Join of all oracle normal subgroups belonging to X.
RadicalResult radical_generic(const Group& g, const GroupClass& x, const Caps& caps = {});
// R_0 = 1, R_{i+1} = join of normal N >= R_i with N/R_i in X, until stable.
RadicalResult poly_radical(const Group& g, const GroupClass& x, const Caps& caps = {});

enum class Verdict { pass, fail, inconclusive, hypothesis_not_met };
std::string to_string(Verdict v);

struct InequalityReport {
  std::string group_id;
  std::string cls;
  BigInt order;
  BigInt residual_order;
  Fraction threshold;         // certified N/D >= gamma
  Fraction threshold_lower;   // certified L/M <= gamma
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

// |G^Xbar| > |G|^gamma for G != 1 with G_X = 1, decided by |G^Xbar|^D > |G|^N.
// A poly class is accepted and reduced to its inner class.
InequalityReport main_inequality_check(const Group& g, const GroupClass& x, const CertifiedBounds& gamma,
                                       const std::string& group_id = {}, const Caps& caps = {});

struct FrattiniBoundReport {
  bool hypothesis_met = false;
  BigInt frattini_order;
  BigInt derived_order;
  BigInt center_index;
  BigInt nilpotent_residual_order;
  bool abelian = false;
  bool abelian_bound_holds = false;     // |G'|^2 >= (G:Z)
  bool abelian_bound_equal = false;
  bool nilpotent_bound_holds = false;   // |G'||G^N| >= (G:Z)
  bool nilpotent_bound_equal = false;
  bool equality_consistent = false;     // equality exactly when abelian
  std::string note;
};

FrattiniBoundReport frattini_bound_check(const Group& g, const Caps& caps = {});

}  // namespace residua

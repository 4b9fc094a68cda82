#pragma once

#include <string>
#include <vector>

#include "residua/catalog.hpp"
#include "residua/exact.hpp"
#include "residua/group.hpp"
#include "residua/group_class.hpp"

namespace residua {

struct SharpnessConfig {
  SimpleGroupRecord s0;
  BigInt l_order;
  std::size_t nu = 0;  // degree of L
  Real gamma;          // limit value from the constants pipeline
};

// L_1 = L, L_k = L_{k-1} wr L, acting on nu^k points.
Group build_L_tower(const Group& l, std::size_t levels, const Caps& caps = {});

// log|S0| / log(|Aut(S0)| |L|^((r-1)/(r(nu-1)))), r = nu^k with k >= 1.
Real gamma_r(const SimpleGroupRecord& s0, const BigInt& l_order, std::size_t nu, const BigInt& r);
// log|S0| / log(|Aut(S0)| |L|^(1/(nu-1))).
Real gamma_limit(const SimpleGroupRecord& s0, const BigInt& l_order, std::size_t nu);

struct GammaTerm {
  std::size_t level = 0;
  BigInt r;
  Real gamma;
};

struct InstanceCheck {
  std::string description;
  BigInt order;
  std::size_t copies = 0;
  bool radical_trivial = false;
  bool no_normal_member = false;  // no nontrivial normal subgroup lies in X
  BigInt residual_order;
  bool residual_order_ok = false;
  bool residual_is_socle_power = false;
  bool ok() const { return radical_trivial && no_normal_member && residual_order_ok && residual_is_socle_power; }
};

struct SharpnessReport {
  SharpnessConfig config;
  std::vector<GammaTerm> gamma_sequence;
  // |L|^((r-1)/(r(nu-1))) grows with r, so gamma_r falls towards gamma from above.
  bool strictly_decreasing = false;
  bool above_limit = false;
  Real limit_gap;
  bool limit_ok = false;
  std::vector<InstanceCheck> instances;
  std::vector<std::string> notes;
};

// W = aut wr top (or aut alone when top is trivial of degree 1). Checks the
// X-radical of W is trivial, no nontrivial normal subgroup is in X, and the
// poly(X)-residual has order |S0|^copies and equals the socle of the base group.
InstanceCheck verify_sharpness_instance(const Group& aut, const Group& top, const GroupClass& x,
                                        const SimpleGroupRecord& s0, std::size_t copies,
                                        const std::string& description, const Caps& caps = {});

// gamma_r for r = nu, nu^2, ..., <= r_max.
SharpnessReport convergence_report(const SharpnessConfig& config, const BigInt& r_max,
                                   const Real& tolerance = Real("1e-6"));

}  // namespace residua

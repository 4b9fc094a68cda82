#include "residua/sharpness.hpp"

#include "residua/errors.hpp"
#include "residua/oracle.hpp"
#include "residua/res_rad.hpp"

namespace residua {

namespace mp = boost::multiprecision;

Group build_L_tower(const Group& l, std::size_t levels, const Caps& caps) {
  if (levels < 1) throw InputError("tower needs at least one level");
  std::size_t degree = l.degree();
  for (std::size_t k = 1; k < levels; ++k) {
    degree *= l.degree();
    if (degree > caps.degree)
      throw CapExceeded("tower of " + std::to_string(levels) + " levels needs degree " + std::to_string(degree) +
                        " above the cap " + std::to_string(caps.degree));
  }
  Group t = l;
  for (std::size_t k = 1; k < levels; ++k) t = wreath_product(t, l, caps);
  return t;
}

Real gamma_r(const SimpleGroupRecord& s0, const BigInt& l_order, std::size_t nu, const BigInt& r) {
  if (nu < 2) throw InputError("nu must be at least 2");
  BigInt p = nu;
  while (p < r) p *= static_cast<unsigned long>(nu);
  if (r < nu || p != r) throw InputError("r = " + r.get_str() + " is not a positive power of " + std::to_string(nu));
  const Real rr = to_real(r);
  const Real expo = (rr - 1) / (rr * Real(nu - 1));
  return mp::log(Real(s0.order)) / (mp::log(Real(s0.aut_order())) + expo * mp::log(to_real(l_order)));
}

Real gamma_limit(const SimpleGroupRecord& s0, const BigInt& l_order, std::size_t nu) {
  return mp::log(Real(s0.order)) /
         (mp::log(Real(s0.aut_order())) + mp::log(to_real(l_order)) / Real(nu - 1));
}

InstanceCheck verify_sharpness_instance(const Group& aut, const Group& top, const GroupClass& x,
                                        const SimpleGroupRecord& s0, std::size_t copies,
                                        const std::string& description, const Caps& caps) {
  InstanceCheck c;
  c.description = description;
  c.copies = copies;
  const std::size_t blocks = top.degree() <= 1 ? 1 : top.degree();
  Group w = blocks == 1 ? aut : wreath_product(aut, top, caps);
  Group base = blocks == 1 ? aut : wreath_base(aut, blocks, caps);
  c.order = w.order();

  const GroupClass inner = x.is_poly() ? x.inner() : x;
  c.radical_trivial = radical(w, inner, caps).subgroup.is_trivial();

  Oracle o(w, caps);
  c.no_normal_member = true;
  for (const auto& n : o.normal_subgroups()) {
    if (n.order() == 1) continue;
    if (member(inner, n.group, caps)) {
      c.no_normal_member = false;
      break;
    }
  }

  Group res = poly_residual(w, inner, caps).subgroup;
  c.residual_order = res.order();
  c.residual_order_ok = c.residual_order == big_pow(s0.order, copies);
  Group soc = Oracle(base, caps).socle().group;
  c.residual_is_socle_power = res.same_as(soc) && soc.order() == c.residual_order;
  return c;
}

SharpnessReport convergence_report(const SharpnessConfig& config, const BigInt& r_max, const Real& tolerance) {
  SharpnessReport rep;
  rep.config = config;
  BigInt r = config.nu;
  for (std::size_t k = 1; r <= r_max; ++k, r *= static_cast<unsigned long>(config.nu))
    rep.gamma_sequence.push_back({k, r, gamma_r(config.s0, config.l_order, config.nu, r)});
  if (rep.gamma_sequence.empty()) throw InputError("r_max is below nu");
  rep.strictly_decreasing = true;
  rep.above_limit = true;
  for (std::size_t i = 0; i < rep.gamma_sequence.size(); ++i) {
    if (i > 0 && !(rep.gamma_sequence[i].gamma < rep.gamma_sequence[i - 1].gamma)) rep.strictly_decreasing = false;
    if (!(rep.gamma_sequence[i].gamma > config.gamma)) rep.above_limit = false;
  }
  rep.limit_gap = mp::abs(rep.gamma_sequence.back().gamma - config.gamma);
  rep.limit_ok = rep.limit_gap < tolerance;
  return rep;
}

}  // namespace residua

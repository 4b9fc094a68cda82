#include "residua/report.hpp"

namespace residua {

namespace {

Json tower_json(const std::vector<Group>& tower) {
  Json a = Json::array();
  for (const auto& t : tower) a.push_back(t.order().get_str());
  return a;
}

}  // namespace

Json to_json(const RadicalValue& v, int digits) {
  return Json{{"symbolic", v.symbolic()}, {"decimal", format_real(v.value(), digits)}};
}

Json to_json(const Fraction& f) { return Json{{"fraction", f.str()}, {"decimal", format_real(f.value(), 15)}}; }

Json to_json(const Caps& c) {
  return Json{{"degree", c.degree}, {"element", c.element}, {"subgroup", c.subgroup}};
}

Json to_json(const ConstantsReport& r) {
  Json checked = Json::array();
  for (const auto& c : r.n0.checked)
    checked.push_back({{"label", c.label},
                       {"degree", c.degree},
                       {"order", c.order.get_str()},
                       {"exceeds_c0_bound", c.exceeds_bound},
                       {"membership", c.membership},
                       {"violates", c.violates}});
  Json below = Json::array();
  for (const auto& c : r.lambda.below_b)
    below.push_back({{"name", c.name}, {"order", c.order}, {"out_order", c.out_order},
                     {"lambda", format_real(c.lambda, 10)}});
  Json witness = group_to_json(r.beta.witness, "beta witness");
  witness["permutation_degree"] = r.beta.degree;
  Json n0{{"value", r.n0.n0}, {"checked_groups", checked}, {"audit", r.n0.audit}};
  if (r.n0.tail) n0["analytic_tail"] = *r.n0.tail;
  if (auto b = n0_bounds(r.m0)) n0["bounds"] = {b->first, b->second};
  const auto& l = r.lambda;
  return Json{
      {"class", r.requested},
      {"m0", r.m0},
      {"c0", to_json(r.c0)},
      {"n0", n0},
      {"beta", {{"value", to_json(r.beta.beta)},
                {"equals_c0", r.beta_equals_c0},
                {"witness", witness},
                {"subgroups_scanned", r.beta.subgroups_scanned},
                {"class_members", r.beta.members},
                {"audit", r.beta.audit}}},
      {"lambda", format_real(l.lambda, 12)},
      {"S0", {{"name", l.s0.name}, {"order", l.s0.order}, {"out_order", l.s0.out_order}, {"aut_order", l.s0.aut_order()}}},
      {"gamma", {{"decimal", format_real(l.gamma, 12)},
                 {"log_ratio", "log(" + l.gamma_ratio.p.get_str() + ") / log(" + l.gamma_ratio.q.get_str() + ")"},
                 {"rational_upper", to_json(l.gamma_bounds.upper)},
                 {"rational_lower", to_json(l.gamma_bounds.lower)}}},
      {"threshold_B", l.threshold_b},
      {"tail_monotone", l.tail_monotone},
      {"excluded_below_B", below},
      {"audit", [&] {
         std::vector<std::string> a = r.audit;
         a.insert(a.end(), l.audit.begin(), l.audit.end());
         return a;
       }()}};
}

Json to_json(const InequalityReport& r) {
  Json j{{"group", r.group_id}, {"class", r.cls}, {"order", r.order.get_str()}, {"verdict", to_string(r.verdict)}};
  if (r.verdict != Verdict::hypothesis_not_met) {
    j["residual_order"] = r.residual_order.get_str();
    j["gamma_upper"] = r.threshold.str();
    j["gamma_lower"] = r.threshold_lower.str();
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const ResidualResult& r, const std::string& group_name) {
  return Json{{"group", group_name},
              {"class", r.cls.descriptor()},
              {"residual", group_to_json(r.subgroup, "residual")},
              {"tower_orders", tower_json(r.tower)},
              {"method", r.method}};
}

Json to_json(const RadicalResult& r, const std::string& group_name) {
  return Json{{"group", group_name},
              {"class", r.cls.descriptor()},
              {"radical", group_to_json(r.subgroup, "radical")},
              {"tower_orders", tower_json(r.tower)},
              {"method", r.method}};
}

Json to_json(const InstanceCheck& c) {
  return Json{{"instance", c.description},
              {"order", c.order.get_str()},
              {"copies", c.copies},
              {"radical_trivial", c.radical_trivial},
              {"no_normal_member", c.no_normal_member},
              {"residual_order", c.residual_order.get_str()},
              {"residual_order_ok", c.residual_order_ok},
              {"residual_is_socle_power", c.residual_is_socle_power}};
}

Json to_json(const SharpnessReport& r) {
  Json seq = Json::array();
  for (const auto& t : r.gamma_sequence)
    seq.push_back({{"level", t.level}, {"r", t.r.get_str()}, {"gamma_r", format_real(t.gamma, 15)}});
  Json inst = Json::array();
  for (const auto& c : r.instances) inst.push_back(to_json(c));
  return Json{{"S0", r.config.s0.name},
              {"L_order", r.config.l_order.get_str()},
              {"nu", r.config.nu},
              {"gamma", format_real(r.config.gamma, 15)},
              {"gamma_sequence", seq},
              {"strictly_decreasing", r.strictly_decreasing},
              {"above_limit", r.above_limit},
              {"limit_gap", format_real(r.limit_gap, 15)},
              {"limit_ok", r.limit_ok},
              {"instance_checks", inst},
              {"notes", r.notes}};
}

Json to_json(const SuiteReport& s) {
  Json checks = Json::array();
  for (const auto& c : s.results) {
    Json j{{"name", c.name}, {"checks", c.checks}, {"violations", c.failures.size()}};
    if (!c.failures.empty()) j["failures"] = c.failures;
    checks.push_back(j);
  }
  return Json{{"suite", s.suite}, {"passed", s.passed()}, {"checks", checks}};
}

Json to_json(const RunManifest& m) {
  return Json{{"command", m.command}, {"class", m.cls},   {"inputs", m.inputs},
              {"caps", to_json(m.caps)}, {"outputs", m.outputs}, {"exit_status", m.exit_status}};
}

}  // namespace residua

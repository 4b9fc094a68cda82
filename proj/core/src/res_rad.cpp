#include "residua/res_rad.hpp"

#include "residua/errors.hpp"
#include "residua/oracle.hpp"

namespace residua {

namespace {

ResidualResult from_series(const std::vector<Group>& series, const GroupClass& x, const char* method) {
  return ResidualResult{series.back(), series, x, method};
}

template <class F>
auto oracle_scale(const GroupClass& x, const Group& g, const char* what, F&& f) {
  try {
    return f();
  } catch (const CapExceeded& e) {
    throw Undecidable(std::string(what) + " for " + x.descriptor() + " on a group of order " + g.order().get_str() +
                      " exceeds the configured scale (" + e.what() + ")");
  }
}

}  // namespace

ResidualResult residual_generic(const Group& g, const GroupClass& x, const Caps& caps) {
  return oracle_scale(x, g, "generic residual", [&] {
    Oracle o(g, caps);
    Subgroup r = o.whole();
    for (const auto& n : o.normal_subgroups())
      if (n.order() < r.order() && section_member(x, o, n)) r = o.meet(r, n);
    std::vector<Group> tower{g};
    if (r.order() != o.size()) tower.push_back(r.group);
    return ResidualResult{r.group, tower, x, "intersection of normal subgroups with quotient in class"};
  });
}

ResidualResult residual(const Group& g, const GroupClass& x, const Caps& caps) {
  switch (x.kind()) {
    case ClassKind::trivial:
      return ResidualResult{g, {g}, x, "whole group"};
    case ClassKind::all: {
      std::vector<Group> t{g};
      Group one = Group::trivial(g.degree());
      if (!g.is_trivial()) t.push_back(one);
      return ResidualResult{one, t, x, "trivial group"};
    }
    case ClassKind::abelian: {
      std::vector<Group> t{g};
      Group d = derived_subgroup(g);
      if (d.order() != g.order()) t.push_back(d);
      return ResidualResult{d, t, x, "derived subgroup"};
    }
    case ClassKind::nilpotent:
      return from_series(lower_central_series(g), x, "lower central series terminal");
    case ClassKind::soluble:
      return from_series(derived_series(g), x, "derived series terminal");
    case ClassKind::poly:
      return poly_residual(g, x.inner(), caps);
    case ClassKind::d0:
    case ClassKind::d0xS:
      return residual_generic(g, x, caps);
  }
  throw InputError("unsupported class");
}

ResidualResult poly_residual(const Group& g, const GroupClass& x0, const Caps& caps) {
  const GroupClass x = x0.is_poly() ? x0.inner() : x0;
  std::vector<Group> tower{g};
  for (;;) {
    Group next = residual(tower.back(), x, caps).subgroup;
    if (next.order() == tower.back().order()) break;
    tower.push_back(std::move(next));
  }
  return ResidualResult{tower.back(), tower, GroupClass::poly(x), "iterated residual"};
}

RadicalResult radical_generic(const Group& g, const GroupClass& x, const Caps& caps) {
  return oracle_scale(x, g, "generic radical", [&] {
    Oracle o(g, caps);
    Subgroup r = o.trivial();
    for (const auto& n : o.normal_subgroups())
      if (!n.set.subset_of(r.set) && member(x, n.group, caps)) r = o.join(r, n);
    if (!member(x, r.group, caps))
      throw InputError("class " + x.descriptor() + " is not normal-product-closed here; the radical does not exist");
    std::vector<Group> tower{o.trivial().group};
    if (r.order() != 1) tower.push_back(r.group);
    return RadicalResult{r.group, tower, x, "join of normal subgroups in class"};
  });
}

RadicalResult radical(const Group& g, const GroupClass& x, const Caps& caps) {
  const Group one = Group::trivial(g.degree());
  switch (x.kind()) {
    case ClassKind::trivial:
      return RadicalResult{one, {one}, x, "trivial group"};
    case ClassKind::all: {
      std::vector<Group> t{one};
      if (!g.is_trivial()) t.push_back(g);
      return RadicalResult{g, t, x, "whole group"};
    }
    case ClassKind::nilpotent: {
      if (is_nilpotent(g)) {
        std::vector<Group> t{one};
        if (!g.is_trivial()) t.push_back(g);
        return RadicalResult{g, t, x, "group is nilpotent"};
      }
      return oracle_scale(x, g, "Fitting subgroup", [&] {
        Oracle o(g, caps);
        Subgroup f = o.fitting();
        std::vector<Group> t{one};
        if (f.order() != 1) t.push_back(f.group);
        return RadicalResult{f.group, t, x, "Fitting subgroup (join of normal p-subgroups)"};
      });
    }
    case ClassKind::soluble: {
      if (is_soluble(g)) {
        std::vector<Group> t{one};
        if (!g.is_trivial()) t.push_back(g);
        return RadicalResult{g, t, x, "group is soluble"};
      }
      return oracle_scale(x, g, "soluble radical", [&] {
        Oracle o(g, caps);
        std::vector<Group> t;
        for (const auto& s : o.soluble_radical_tower()) t.push_back(s.group);
        return RadicalResult{t.back(), t, x, "iterated Fitting tower"};
      });
    }
    case ClassKind::poly:
      return poly_radical(g, x.inner(), caps);
    case ClassKind::abelian:
    case ClassKind::d0:
    case ClassKind::d0xS:
      if (x.kind() == ClassKind::d0xS && is_soluble(g)) {
        std::vector<Group> t{one};
        if (!g.is_trivial()) t.push_back(g);
        return RadicalResult{g, t, x, "group is soluble"};
      }
      return radical_generic(g, x, caps);
  }
  throw InputError("unsupported class");
}

RadicalResult poly_radical(const Group& g, const GroupClass& x0, const Caps& caps) {
  const GroupClass x = x0.is_poly() ? x0.inner() : x0;
  if (x.admits_cyclic() && g.order() > static_cast<unsigned long>(caps.element) && is_soluble(g)) {
    std::vector<Group> t{Group::trivial(g.degree())};
    for (auto& d : [&] {
           auto s = derived_series(g);
           return std::vector<Group>(s.rbegin() + 1, s.rend());
         }())
      t.push_back(d);
    return RadicalResult{g, t, GroupClass::poly(x), "soluble beyond oracle scale; reversed derived series"};
  }
  return oracle_scale(x, g, "poly radical", [&] {
    Oracle o(g, caps);
    std::vector<Subgroup> tower{o.trivial()};
    for (;;) {
      const Subgroup r = tower.back();
      Subgroup next = r;
      for (const auto& n : o.normal_subgroups())
        if (r.set.subset_of(n.set) && !n.set.subset_of(next.set) && section_member(x, n.group, r.group, caps))
          next = o.join(next, n);
      if (next.order() == r.order()) break;
      tower.push_back(std::move(next));
    }
    std::vector<Group> t;
    for (const auto& s : tower) t.push_back(s.group);
    return RadicalResult{t.back(), t, GroupClass::poly(x), "ascending radical tower"};
  });
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::hypothesis_not_met: return "hypothesis not met";
  }
  return "?";
}

InequalityReport main_inequality_check(const Group& g, const GroupClass& x0, const CertifiedBounds& gamma,
                                       const std::string& group_id, const Caps& caps) {
  const GroupClass x = x0.is_poly() ? x0.inner() : x0;
  InequalityReport rep;
  rep.group_id = group_id;
  rep.cls = GroupClass::poly(x).descriptor();
  rep.order = g.order();
  rep.threshold = gamma.upper;
  rep.threshold_lower = gamma.lower;
  if (g.is_trivial()) {
    rep.verdict = Verdict::hypothesis_not_met;
    rep.note = "G is trivial";
    return rep;
  }
  RadicalResult r = radical(g, x, caps);
  if (!r.subgroup.is_trivial()) {
    rep.verdict = Verdict::hypothesis_not_met;
    rep.note = "radical for " + x.descriptor() + " has order " + r.subgroup.order().get_str();
    return rep;
  }
  rep.residual_order = poly_residual(g, x, caps).subgroup.order();
  const unsigned long n = gamma.upper.num.get_ui(), d = gamma.upper.den.get_ui();
  const unsigned long l = gamma.lower.num.get_ui(), m = gamma.lower.den.get_ui();
  if (compare_powers(rep.residual_order, d, rep.order, n) > 0) {
    rep.verdict = Verdict::pass;
    rep.note = "|R|^" + std::to_string(d) + " > |G|^" + std::to_string(n);
  } else if (compare_powers(rep.residual_order, m, rep.order, l) <= 0) {
    rep.verdict = Verdict::fail;
    rep.note = "|R|^" + std::to_string(m) + " <= |G|^" + std::to_string(l);
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.note = "value lies between the certified bounds";
  }
  return rep;
}

FrattiniBoundReport frattini_bound_check(const Group& g, const Caps& caps) {
  FrattiniBoundReport rep;
  Oracle o(g, caps);
  Subgroup phi = o.frattini();
  rep.frattini_order = static_cast<unsigned long>(phi.order());
  if (phi.order() != 1) {
    rep.note = "Frattini subgroup has order " + std::to_string(phi.order());
    return rep;
  }
  rep.hypothesis_met = true;
  rep.abelian = is_abelian(g);
  rep.derived_order = derived_subgroup(g).order();
  rep.center_index = g.order() / static_cast<unsigned long>(o.center().order());
  rep.nilpotent_residual_order = lower_central_series(g).back().order();
  const BigInt lhs1 = rep.derived_order * rep.derived_order;
  const BigInt lhs2 = rep.derived_order * rep.nilpotent_residual_order;
  rep.abelian_bound_holds = lhs1 >= rep.center_index;
  rep.abelian_bound_equal = lhs1 == rep.center_index;
  rep.nilpotent_bound_holds = lhs2 >= rep.center_index;
  rep.nilpotent_bound_equal = lhs2 == rep.center_index;
  rep.equality_consistent = rep.abelian_bound_equal == rep.abelian && rep.nilpotent_bound_equal == rep.abelian;
  return rep;
}

}  // namespace residua

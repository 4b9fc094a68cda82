#include "residua/suites.hpp"

#include <map>
#include <mutex>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "residua/constants.hpp"
#include "residua/errors.hpp"
#include "residua/oracle.hpp"
#include "residua/res_rad.hpp"

namespace residua {

namespace {

void expect(CheckResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) r.failures.push_back(what);
}

std::string on(const NamedGroup& g, const GroupClass& x) { return g.name + " [" + x.descriptor() + "]"; }

bool contains_set(const Subgroup& big, const Subgroup& small) { return small.set.subset_of(big.set); }

// Elements of the symmetric group normalizing G, for small degrees.
std::vector<Permutation> normalizer_elements(const Group& g, const Caps& caps) {
  static std::map<std::size_t, std::vector<Permutation>> sym;
  static std::mutex mutex;
  std::vector<Permutation> out;
  if (g.degree() > 7) return out;
  std::lock_guard lock(mutex);
  auto it = sym.find(g.degree());
  if (it == sym.end()) it = sym.emplace(g.degree(), enumerate_elements(Group::symmetric(g.degree()), caps)).first;
  for (const auto& s : it->second) {
    bool normalizes = true;
    for (const auto& x : g.generators())
      if (!g.contains(conjugate(x, s))) {
        normalizes = false;
        break;
      }
    if (normalizes) out.push_back(s);
  }
  return out;
}

bool invariant_under(const Group& h, const std::vector<Permutation>& autos) {
  for (const auto& s : autos)
    for (const auto& x : h.generators())
      if (!h.contains(conjugate(x, s))) return false;
  return true;
}

bool is_subnormal(const Group& h, const Group& g) {
  Group k = g;
  while (!k.same_as(h)) {
    Group next = normal_closure(k, h.generators());
    if (next.same_as(k)) return false;
    k = next;
  }
  return true;
}

const Subgroup* find_normal(const std::vector<Subgroup>& normals, const ElementSet& s) {
  for (const auto& n : normals)
    if (n.set == s) return &n;
  return nullptr;
}

struct ClassPair {
  GroupClass small;
  GroupClass large;
};

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

std::size_t SuiteReport::checks() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.checks;
  return n;
}

std::size_t SuiteReport::violations() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.failures.size();
  return n;
}

std::vector<NamedGroup> oracle_corpus(const Caps& caps) {
  std::vector<NamedGroup> out;
  for (const auto& e : load_corpus(data_dir(), caps))
    if (e.group.order() <= static_cast<unsigned long>(caps.element)) out.push_back({e.name, e.group});
  return out;
}

SuiteReport perm_core_suite(const std::vector<NamedGroup>& corpus, const Caps& caps) {
  SuiteReport rep{"perm_core", {}};
  CheckResult order{"order matches enumeration", 0, {}};
  CheckResult gens{"generators are members", 0, {}};
  CheckResult inv{"p * p^-1 is the identity", 0, {}};
  CheckResult series{"series terms are normal and descending", 0, {}};
  CheckResult products{"direct and wreath product orders", 0, {}};
  for (const auto& g : corpus) {
    expect(order, BigInt(static_cast<unsigned long>(enumerate_elements(g.group, caps).size())) == g.group.order(),
           g.name);
    for (const auto& x : g.group.generators()) {
      expect(gens, g.group.contains(x), g.name);
      expect(inv, (x * x.inverse()).is_identity() && (x.inverse() * x).is_identity(), g.name);
    }
    for (const auto& s : {derived_series(g.group), lower_central_series(g.group)}) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        expect(series, is_normal_in(s[i], g.group), g.name + " term " + std::to_string(i) + " not normal");
        if (i > 0) expect(series, s[i].is_subgroup_of(s[i - 1]) && !s[i].same_as(s[i - 1]), g.name);
      }
    }
    if (g.group.order() <= 60 && g.group.degree() <= 8) {
      Group c2 = Group::cyclic(2);
      expect(products, direct_product(g.group, c2, caps).order() == g.group.order() * 2, g.name + " x C2");
      expect(products, wreath_product(g.group, c2, caps).order() == g.group.order() * g.group.order() * 2,
             g.name + " wr C2");
    }
  }
  rep.results = {order, gens, inv, series, products};
  return rep;
}

SuiteReport oracle_equivalence_suite(const std::vector<NamedGroup>& corpus, const Caps& caps, std::size_t max_order) {
  SuiteReport rep{"oracle equivalence", {}};
  CheckResult res{"fast residual = generic residual", 0, {}};
  CheckResult rad{"fast radical = generic radical", 0, {}};
  CheckResult cen{"centre by centralizers = oracle centre", 0, {}};
  const std::vector<GroupClass> residual_classes{GroupClass::abelian(), GroupClass::nilpotent(), GroupClass::soluble()};
  const std::vector<GroupClass> radical_classes{GroupClass::nilpotent(), GroupClass::soluble()};
  for (const auto& g : corpus) {
    if (g.group.order() > static_cast<unsigned long>(max_order)) continue;
    for (const auto& x : residual_classes)
      expect(res, residual(g.group, x, caps).subgroup.same_as(residual_generic(g.group, x, caps).subgroup), on(g, x));
    for (const auto& x : radical_classes)
      expect(rad, radical(g.group, x, caps).subgroup.same_as(radical_generic(g.group, x, caps).subgroup), on(g, x));
    Oracle o(g.group, caps);
    expect(cen, center(g.group).same_as(o.center().group), g.name);
  }
  rep.results = {res, rad, cen};
  return rep;
}

SuiteReport closure_law_suite(const std::vector<NamedGroup>& corpus, const Caps& caps) {
  SuiteReport rep{"closure laws", {}};
  const GroupClass ab = GroupClass::abelian(), nil = GroupClass::nilpotent(), sol = GroupClass::soluble();
  const GroupClass dxs = GroupClass::d0xS("A5");
  const GroupClass poly_nil = GroupClass::poly(nil), poly_dxs = GroupClass::poly(dxs);

  const std::vector<GroupClass> formations{ab, nil, sol, dxs, poly_dxs};
  const std::vector<GroupClass> fitting_classes{nil, sol, dxs, poly_nil, poly_dxs};
  const std::vector<ClassPair> residual_pairs{{ab, nil}, {nil, sol}, {sol, dxs}, {dxs, poly_dxs}, {sol, poly_dxs}};
  const std::vector<ClassPair> radical_pairs{{nil, sol}, {nil, dxs}, {sol, poly_dxs}, {dxs, poly_dxs}};
  const std::vector<GroupClass> poly_inner{ab, nil, dxs};

  CheckResult res_i{"residual: normal, minimal, invariant, (G/N)^X = G^X N/N", 0, {}};
  CheckResult res_ii{"residual: G^X = 1 iff G in X", 0, {}};
  CheckResult res_iii{"residual: X <= Y implies G^Y <= G^X", 0, {}};
  CheckResult rad_i{"radical: normal X-subgroup containing every normal X-subgroup", 0, {}};
  CheckResult rad_iii{"radical: subnormal X-subgroups lie in G_X", 0, {}};
  CheckResult rad_iv{"radical: X <= Y implies G_X <= G_Y", 0, {}};
  CheckResult int_i{"normal-product closed implies direct-product closed", 0, {}};
  CheckResult int_ii{"subgroup and direct-product closed implies residually closed", 0, {}};
  CheckResult int_iii{"image and extension closed implies normal-product closed", 0, {}};
  CheckResult int_iv{"G_X N/N <= (G/N)_X, equality for N in X when extension closed", 0, {}};
  CheckResult int_v{"(G/G_X)_X = 1 for extension-closed Fitting classes", 0, {}};
  CheckResult ext_iii{"poly(X) is extension closed", 0, {}};
  CheckResult ext_iv{"G in poly(X) with G_X = 1 implies G = 1", 0, {}};
  CheckResult ext_v{"a nontrivial G with G_X = 1 lies outside poly(X)", 0, {}};
  CheckResult ext_ix{"poly(X) membership iff a characteristic series with X-factors exists", 0, {}};

  // Small members of each class for direct products.
  std::map<std::string, std::vector<const NamedGroup*>> small_members;

  for (const auto& g : corpus) {
    Oracle o(g.group, caps);
    const auto& normals = o.normal_subgroups();
    const auto autos = g.group.order() <= 200 ? normalizer_elements(g.group, caps) : std::vector<Permutation>{};
    const bool lattice_scale = g.group.order() <= static_cast<unsigned long>(caps.subgroup);
    std::map<std::string, std::vector<bool>> quotient_in;  // G/N in X, per normal
    std::map<std::string, std::vector<bool>> normal_in;    // N in X, per normal

    auto quotients = [&](const GroupClass& x) -> const std::vector<bool>& {
      auto it = quotient_in.find(x.descriptor());
      if (it != quotient_in.end()) return it->second;
      std::vector<bool> v;
      for (const auto& n : normals) v.push_back(section_member(x, o, n));
      return quotient_in.emplace(x.descriptor(), std::move(v)).first->second;
    };
    auto members = [&](const GroupClass& x) -> const std::vector<bool>& {
      auto it = normal_in.find(x.descriptor());
      if (it != normal_in.end()) return it->second;
      std::vector<bool> v;
      for (const auto& n : normals) v.push_back(member(x, n.group, caps));
      return normal_in.emplace(x.descriptor(), std::move(v)).first->second;
    };
    // (M/N in X) for normals N <= M, decided on the section.
    auto section = [&](const GroupClass& x, const Subgroup& m, const Subgroup& n) {
      return section_member(x, m.group, n.group, caps);
    };

    std::map<std::string, Subgroup> residuals;
    for (const auto& x : formations) {
      Subgroup r = o.subgroup(residual(g.group, x, caps).subgroup);
      residuals.emplace(x.descriptor(), r);
      const auto& q = quotients(x);
      expect(res_i, is_normal_in(r.group, g.group) && section_member(x, o, r), on(g, x) + " residual not an X-quotient");
      if (!autos.empty()) expect(res_i, invariant_under(r.group, autos), on(g, x) + " residual not invariant");
      for (std::size_t i = 0; i < normals.size(); ++i) {
        if (q[i]) expect(res_i, contains_set(normals[i], r), on(g, x) + " residual not minimal");
        // Smallest normal M >= N with G/M in X, against G^X N.
        ElementSet smallest = o.whole().set;
        for (std::size_t j = 0; j < normals.size(); ++j)
          if (q[j] && contains_set(normals[j], normals[i])) smallest = smallest & normals[j].set;
        expect(res_i, smallest == o.join(r, normals[i]).set, on(g, x) + " quotient formula at N of order " +
                                                                 std::to_string(normals[i].order()));
      }
      expect(res_ii, (r.order() == 1) == member(x, g.group, caps), on(g, x));
    }
    for (const auto& [x, y] : residual_pairs)
      expect(res_iii, contains_set(residuals.at(x.descriptor()), residuals.at(y.descriptor())),
             g.name + " " + x.descriptor() + " <= " + y.descriptor());

    std::map<std::string, Subgroup> radicals;
    std::vector<bool> subnormal;
    for (const auto& x : fitting_classes) {
      Subgroup r = o.subgroup(radical(g.group, x, caps).subgroup);
      radicals.emplace(x.descriptor(), r);
      const auto& m = members(x);
      expect(rad_i, is_normal_in(r.group, g.group) && member(x, r.group, caps), on(g, x) + " radical not in X");
      if (!autos.empty()) expect(rad_i, invariant_under(r.group, autos), on(g, x) + " radical not invariant");
      for (std::size_t i = 0; i < normals.size(); ++i)
        if (m[i]) expect(rad_i, contains_set(r, normals[i]), on(g, x) + " radical misses a normal X-subgroup");
      expect(rad_i, (r.order() == o.size()) == member(x, g.group, caps), on(g, x) + " G_X = G iff G in X");
      if (lattice_scale) {
        const auto& subs = o.all_subgroups().subgroups;
        if (subnormal.empty())
          for (const auto& h : subs) subnormal.push_back(is_subnormal(h.group, g.group));
        for (std::size_t i = 0; i < subs.size(); ++i) {
          const auto& h = subs[i];
          if (contains_set(r, h) || !subnormal[i]) {
            ++rad_iii.checks;
            continue;
          }
          expect(rad_iii, !member(x, h.group, caps),
                 on(g, x) + " subnormal X-subgroup of order " + std::to_string(h.order()) + " outside G_X");
        }
      }
    }
    for (const auto& [x, y] : radical_pairs)
      expect(rad_iv, contains_set(radicals.at(y.descriptor()), radicals.at(x.descriptor())),
             g.name + " " + x.descriptor() + " <= " + y.descriptor());

    // Closure interdependences on the normal lattice.
    for (const auto& x : formations) {
      const auto decl = x.declared_closures();
      const auto& q = quotients(x);
      if (decl.count(Closure::subgroup) && decl.count(Closure::n0)) {
        for (std::size_t i = 0; i < normals.size(); ++i)
          for (std::size_t j = i + 1; j < normals.size(); ++j) {
            if (!q[i] || !q[j]) continue;
            const Subgroup* meet = find_normal(normals, normals[i].set & normals[j].set);
            expect(int_ii, meet && section_member(x, o, *meet), on(g, x) + " R0 fails");
          }
      }
    }
    for (const auto& x : fitting_classes) {
      const auto decl = x.declared_closures();
      const auto& m = members(x);
      const bool extension = decl.count(Closure::extension) != 0;
      if (extension && decl.count(Closure::quotient)) {
        for (std::size_t i = 0; i < normals.size(); ++i)
          for (std::size_t j = i + 1; j < normals.size(); ++j) {
            if (!m[i] || !m[j]) continue;
            const Subgroup* prod = find_normal(normals, o.join(normals[i], normals[j]).set);
            expect(int_iii, prod && member(x, prod->group, caps), on(g, x) + " normal product fails");
          }
      }
      const Subgroup& gx = radicals.at(x.descriptor());
      if (decl.count(Closure::quotient) && decl.count(Closure::n0)) {
        for (std::size_t i = 0; i < normals.size(); ++i) {
          const Subgroup& n = normals[i];
          // (G/N)_X as the join of normal M >= N with M/N in X.
          Subgroup top = n;
          for (const auto& mm : normals)
            if (contains_set(mm, n) && !contains_set(top, mm) && section(x, mm, n)) top = o.join(top, mm);
          const Subgroup lower = o.join(gx, n);
          expect(int_iv, contains_set(top, lower), on(g, x) + " inclusion at N of order " + std::to_string(n.order()));
          if (m[i] && extension)
            expect(int_iv, top.set == lower.set, on(g, x) + " equality at N of order " + std::to_string(n.order()));
        }
      }
      if (extension && decl.count(Closure::n0)) {
        bool clean = true;
        for (const auto& mm : normals)
          if (contains_set(mm, gx) && mm.order() > gx.order() && section(x, mm, gx)) clean = false;
        expect(int_v, clean, on(g, x));
      }
    }

    // Extension closure.
    for (const auto& x : poly_inner) {
      const GroupClass y = GroupClass::poly(x);
      const auto& my = members(y);
      const auto& qy = quotients(y);
      const bool g_in_y = member(y, g.group, caps);
      for (std::size_t i = 0; i < normals.size(); ++i)
        if (my[i] && qy[i]) expect(ext_iii, g_in_y, on(g, y) + " extension of members is not a member");
      const auto decl = x.declared_closures();
      if (decl.count(Closure::n0)) {
        const bool rad_trivial = radical(g.group, x, caps).subgroup.is_trivial();
        if (g_in_y) expect(ext_iv, !rad_trivial || g.group.is_trivial(), on(g, y));
        if (rad_trivial && !g.group.is_trivial()) expect(ext_v, !g_in_y, on(g, y));
      }
      if (decl.count(Closure::quotient) && decl.count(Closure::n0)) {
        // Ascending radical tower: characteristic terms, X-factors.
        auto tower = poly_radical(g.group, x, caps).tower;
        bool series_ok = tower.back().same_as(g.group);
        for (std::size_t i = 1; i < tower.size() && series_ok; ++i) {
          if (!is_normal_in(tower[i], g.group) || !section_member(x, tower[i], tower[i - 1], caps)) series_ok = false;
          if (!autos.empty() && !invariant_under(tower[i], autos)) series_ok = false;
        }
        expect(ext_ix, series_ok == g_in_y, on(g, y));
      }
    }

    for (const auto& x : fitting_classes)
      if (g.group.order() <= 60 && member(x, g.group, caps)) small_members[x.descriptor()].push_back(&g);
  }

  // Direct products of small members.
  for (const auto& x : fitting_classes) {
    const auto& list = small_members[x.descriptor()];
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i; j < list.size(); ++j) {
        const Group& a = list[i]->group;
        const Group& b = list[j]->group;
        if (a.degree() + b.degree() > caps.degree || a.order() * b.order() > 3600) continue;
        expect(int_i, member(x, direct_product(a, b, caps), caps),
               x.descriptor() + " " + list[i]->name + " x " + list[j]->name);
      }
  }

  rep.results = {res_i, res_ii, res_iii, rad_i, rad_iii, rad_iv, int_i, int_ii,
                 int_iii, int_iv, int_v, ext_iii, ext_iv, ext_v, ext_ix};
  return rep;
}

SuiteReport frattini_suite(const std::vector<NamedGroup>& corpus, const Caps& caps) {
  SuiteReport rep{"frattini", {}};
  CheckResult ab{"|G'|^2 >= (G:Z), equality iff abelian", 0, {}};
  CheckResult nil{"|G'| |G^N| >= (G:Z), equality iff abelian", 0, {}};
  CheckResult gen{"|G'| |G^X| >= (G:Z) for X between abelian and nilpotent, equality iff abelian", 0, {}};
  CheckResult count{"groups with trivial Frattini subgroup", 0, {}};
  std::size_t hypothesis = 0;
  for (const auto& g : corpus) {
    FrattiniBoundReport f = frattini_bound_check(g.group, caps);
    if (!f.hypothesis_met) continue;
    ++hypothesis;
    expect(ab, f.abelian_bound_holds && f.abelian_bound_equal == f.abelian, g.name);
    expect(nil, f.nilpotent_bound_holds && f.nilpotent_bound_equal == f.abelian, g.name);
    for (const auto& x : {GroupClass::abelian(), GroupClass::nilpotent()}) {
      const BigInt rhs = f.derived_order * residual(g.group, x, caps).subgroup.order();
      expect(gen, rhs >= f.center_index && (rhs == f.center_index) == f.abelian, on(g, x));
    }
  }
  expect(count, hypothesis >= 10, std::to_string(hypothesis) + " groups");
  rep.results = {ab, nil, gen, count};
  return rep;
}

SuiteReport data_suite(const SimpleTable& table, const PrimitiveCatalog& catalog) {
  SuiteReport rep{"data", {}};
  CheckResult kohl{"Kohl inequality and census", 0, {}};
  CheckResult aut{"aut order = order x out order", 0, {}};
  CheckResult tail{"degree-12 tail comparison 3^48 vs 120^11", 0, {}};
  CheckResult cat{"primitive catalog coverage", 0, {}};
  CheckResult minimal{"minimal simple families", 0, {}};

  KohlReport k = kohl_sanity(table);
  expect(kohl, k.kohl_holds, k.failures.empty() ? "" : k.failures.front());
  expect(kohl, k.census_60_3960 == 8, "census (60, 3960] = " + std::to_string(k.census_60_3960));
  expect(kohl, k.census_168_4529_without_a6 == 8, "census [168, 4529] = " + std::to_string(k.census_168_4529_without_a6));
  for (const auto& s : table.records) expect(aut, s.aut_order() == s.order * s.out_order, s.name);

  // 3^(4n) vs 120^(n-1): exact signs and a 50-digit cross-check.
  for (int n = 7; n <= 13; ++n) {
    const int exact = maroti_tail_sign(n, 6);
    const Real lhs = Real(4 * n) * boost::multiprecision::log(Real(3));
    const Real rhs = Real(n - 1) * boost::multiprecision::log(Real(120));
    const int approx = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    expect(tail, exact == approx, "float disagrees at n = " + std::to_string(n));
  }
  expect(tail, maroti_tail_sign(12, 6) > 0, "3^48 > 120^11 expected");
  expect(tail, maroti_tail_sign(13, 6) < 0, "3^52 < 120^12 expected");
  expect(tail, analytic_tail(6) == 13, "tail for m0 = 6");

  for (std::size_t d = 5; d <= 12; ++d) expect(cat, catalog.covers(d), "degree " + std::to_string(d));
  bool has20 = false;
  if (catalog.covers(5))
    for (const auto& e : catalog.by_degree.at(5)) has20 = has20 || e.order == 20;
  expect(cat, has20, "degree 5 lacks the Frobenius group of order 20");

  for (const char* name : {"A5", "PSL(2,4)", "PSL(2,7)", "PSL(2,8)", "PSL(2,13)", "PSL(2,27)", "Sz(8)", "Sz(32)", "PSL(3,3)"})
    expect(minimal, is_minimal_simple(name), std::string(name) + " should be minimal simple");
  for (const char* name : {"A6", "A7", "PSL(2,11)", "PSL(2,16)", "PSL(2,19)", "M11"})
    expect(minimal, !is_minimal_simple(name), std::string(name) + " should not be minimal simple");
  const SimpleGroupRecord* l33 = table.find("PSL(3,3)");
  expect(minimal, l33 && l33->order == 5616, "PSL(3,3) has order 5616");

  rep.results = {kohl, aut, tail, cat, minimal};
  return rep;
}

}  // namespace residua

#include "residua/group_class.hpp"

#include <algorithm>
#include <sstream>

#include "residua/catalog.hpp"
#include "residua/errors.hpp"

namespace residua {

std::string to_string(Closure c) {
  switch (c) {
    case Closure::subgroup: return "subgroup";
    case Closure::quotient: return "quotient";
    case Closure::extension: return "extension";
    case Closure::normal_product: return "normal-product";
    case Closure::residual: return "residual";
    case Closure::n0: return "N0";
  }
  return "?";
}

GroupClass GroupClass::trivial() { return GroupClass(); }

GroupClass GroupClass::abelian() {
  GroupClass c;
  c.kind_ = ClassKind::abelian;
  return c;
}

GroupClass GroupClass::nilpotent() {
  GroupClass c;
  c.kind_ = ClassKind::nilpotent;
  return c;
}

GroupClass GroupClass::soluble() {
  GroupClass c;
  c.kind_ = ClassKind::soluble;
  return c;
}

GroupClass GroupClass::all() {
  GroupClass c;
  c.kind_ = ClassKind::all;
  return c;
}

namespace {

std::string checked_simple(std::string_view simple, bool require_minimal) {
  std::string name = canonical_simple_name(simple);
  if (name.empty()) throw InputError("missing simple group name in class descriptor");
  if (require_minimal && !is_minimal_simple(name))
    throw InputError("'" + name + "' is not a minimal simple group; D0(J) x soluble needs J minimal simple");
  return name;
}

}  // namespace

GroupClass GroupClass::d0(std::string_view simple, bool require_minimal_simple) {
  GroupClass c;
  c.kind_ = ClassKind::d0;
  c.simple_ = checked_simple(simple, require_minimal_simple);
  return c;
}

GroupClass GroupClass::d0xS(std::string_view simple, bool require_minimal_simple) {
  GroupClass c;
  c.kind_ = ClassKind::d0xS;
  c.simple_ = checked_simple(simple, require_minimal_simple);
  return c;
}

GroupClass GroupClass::poly(const GroupClass& x) {
  switch (x.kind_) {
    case ClassKind::poly:
    case ClassKind::trivial:
    case ClassKind::soluble:
    case ClassKind::all:
      return x;
    default:
      break;
  }
  GroupClass c;
  c.kind_ = ClassKind::poly;
  c.inner_ = std::make_shared<const GroupClass>(x);
  return c;
}

GroupClass extension_closure(const GroupClass& x) { return GroupClass::poly(x); }

GroupClass GroupClass::parse(std::string_view d) {
  if (d == "trivial") return trivial();
  if (d == "abelian") return abelian();
  if (d == "nilpotent") return nilpotent();
  if (d == "soluble") return soluble();
  if (d == "all") return all();
  if (d.rfind("poly:", 0) == 0) return poly(parse(d.substr(5)));
  if (d.rfind("d0xS:", 0) == 0) return d0xS(d.substr(5));
  if (d.rfind("d0:", 0) == 0) return d0(d.substr(3));
  throw InputError("unknown class descriptor '" + std::string(d) + "'");
}

const GroupClass& GroupClass::inner() const {
  if (!inner_) throw InputError("class " + descriptor() + " has no inner class");
  return *inner_;
}

std::string GroupClass::descriptor() const {
  switch (kind_) {
    case ClassKind::trivial: return "trivial";
    case ClassKind::abelian: return "abelian";
    case ClassKind::nilpotent: return "nilpotent";
    case ClassKind::soluble: return "soluble";
    case ClassKind::all: return "all";
    case ClassKind::d0: return "d0:" + simple_;
    case ClassKind::d0xS: return "d0xS:" + simple_;
    case ClassKind::poly: return "poly:" + inner_->descriptor();
  }
  return "?";
}

std::set<Closure> GroupClass::declared_closures() const {
  using C = Closure;
  const std::set<C> every{C::subgroup, C::quotient, C::extension, C::normal_product, C::residual, C::n0};
  switch (kind_) {
    case ClassKind::trivial:
    case ClassKind::soluble:
    case ClassKind::all:
      return every;
    case ClassKind::abelian:
      return {C::subgroup, C::quotient, C::residual};
    case ClassKind::nilpotent:
      return {C::subgroup, C::quotient, C::residual, C::normal_product, C::n0};
    case ClassKind::d0:
      return {C::quotient, C::residual, C::normal_product, C::n0};
    case ClassKind::d0xS: {
      std::set<C> s{C::quotient, C::residual, C::normal_product, C::n0};
      if (is_minimal_simple(simple_)) s.insert(C::subgroup);
      return s;
    }
    case ClassKind::poly: {
      auto in = inner_->declared_closures();
      std::set<C> s{C::extension};
      if (in.count(C::subgroup)) s.insert(C::subgroup);
      if (in.count(C::quotient)) s.insert(C::quotient);
      if (in.count(C::subgroup) && in.count(C::quotient)) {
        s.insert(C::normal_product);
        s.insert(C::n0);
        s.insert(C::residual);
      }
      return s;
    }
  }
  return {};
}

bool GroupClass::admits_cyclic() const {
  switch (kind_) {
    case ClassKind::trivial:
    case ClassKind::d0:
      return false;
    case ClassKind::poly:
      return inner_->admits_cyclic();
    default:
      return true;
  }
}

bool GroupClass::admits_simple(std::string_view name) const {
  switch (kind_) {
    case ClassKind::all: return true;
    case ClassKind::d0:
    case ClassKind::d0xS: return canonical_simple_name(name) == simple_;
    case ClassKind::poly: return inner_->admits_simple(name);
    default: return false;
  }
}

std::string Characteristic::str() const {
  if (full) return "full";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
  os << '}';
  return os.str();
}

Characteristic characteristic(const GroupClass& x) {
  Characteristic c;
  c.full = x.admits_cyclic();
  return c;
}

// ---------------------------------------------------------------- membership

namespace {

bool factors_admitted(const GroupClass& x, const std::vector<FactorDescriptor>& fs) {
  for (const auto& f : fs) {
    if (f.kind == FactorDescriptor::Kind::cyclic) {
      if (!x.admits_cyclic()) return false;
    } else if (x.kind() != ClassKind::all && !(f.name && x.admits_simple(*f.name))) {
      return false;
    }
  }
  return true;
}

template <class F>
auto at_scale(const GroupClass& x, const Group& g, F&& f) {
  try {
    return f();
  } catch (const CapExceeded& e) {
    throw Undecidable("membership in " + x.descriptor() + " for a group of order " + g.order().get_str() +
                      " is undecidable at the configured scale (" + e.what() + ")");
  }
}

// Relative lower central / derived series: does it reach N?
bool relative_series_reaches(const Group& g, const Group& n, bool derived) {
  Group c = g;
  for (;;) {
    std::vector<Permutation> seeds = n.generators();
    for (const auto& a : c.generators())
      for (const auto& b : (derived ? c.generators() : g.generators())) {
        Permutation k = commutator(a, b);
        if (!k.is_identity()) seeds.push_back(std::move(k));
      }
    Group next = normal_closure(g, seeds);
    if (next.order() == n.order()) return true;
    if (next.order() == c.order()) return false;
    c = std::move(next);
  }
}

}  // namespace

D0xSDecomposition d0xs_decomposition(const Oracle& o, const Subgroup& n, std::string_view simple) {
  const auto& ns = o.normal_subgroups();
  std::vector<const Subgroup*> above;
  for (const auto& m : ns)
    if (n.set.subset_of(m.set)) above.push_back(&m);
  D0xSDecomposition d;
  d.soluble_radical = n;
  std::vector<bool> soluble_section(above.size());
  for (std::size_t i = 0; i < above.size(); ++i) {
    soluble_section[i] = above[i]->order() == n.order() || relative_series_reaches(above[i]->group, n.group, true);
    if (soluble_section[i]) d.soluble_radical = o.join(d.soluble_radical, *above[i]);
  }
  d.semisimple_part = n;
  for (std::size_t i = 0; i < above.size(); ++i) {
    if (above[i]->order() == n.order() || soluble_section[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < above.size() && minimal; ++j)
      if (above[j]->order() > n.order() && above[j]->order() < above[i]->order() &&
          above[j]->set.subset_of(above[i]->set))
        minimal = false;
    if (minimal) d.semisimple_part = o.join(d.semisimple_part, *above[i]);
  }
  d.trivial_intersection = (d.semisimple_part.set & d.soluble_radical.set) == n.set;
  d.product_is_whole = BigInt(static_cast<unsigned long>(d.semisimple_part.order())) *
                           static_cast<unsigned long>(d.soluble_radical.order()) ==
                       BigInt(static_cast<unsigned long>(o.size())) * static_cast<unsigned long>(n.order());
  d.factors_match = true;
  if (d.semisimple_part.order() != n.order()) {
    auto fs = factor_difference(composition_factors(d.semisimple_part.group, o.caps()),
                                composition_factors(n.group, o.caps()));
    for (const auto& f : fs)
      if (f.kind != FactorDescriptor::Kind::nonabelian || !f.name || *f.name != simple) d.factors_match = false;
  }
  return d;
}

bool section_member(const GroupClass& x, const Oracle& o, const Subgroup& n) {
  const Group& g = o.group();
  switch (x.kind()) {
    case ClassKind::d0:
    case ClassKind::d0xS: {
      auto d = d0xs_decomposition(o, n, x.simple());
      if (!d.accepted()) return false;
      return x.kind() == ClassKind::d0xS || d.soluble_radical.order() == n.order();
    }
    default:
      return section_member(x, g, n.group, o.caps());
  }
}

bool section_member(const GroupClass& x, const Group& g, const Group& n, const Caps& caps) {
  if (n.order() == g.order()) return true;
  switch (x.kind()) {
    case ClassKind::trivial:
      return false;
    case ClassKind::abelian: {
      for (const auto& a : g.generators())
        for (const auto& b : g.generators())
          if (!n.contains(commutator(a, b))) return false;
      return true;
    }
    case ClassKind::nilpotent:
      return relative_series_reaches(g, n, false);
    case ClassKind::soluble:
      return relative_series_reaches(g, n, true);
    case ClassKind::all:
      return true;
    case ClassKind::d0:
    case ClassKind::d0xS:
      return at_scale(x, g, [&] {
        if (x.kind() == ClassKind::d0xS && relative_series_reaches(g, n, true)) return true;
        Oracle o(g, caps);
        return section_member(x, o, o.subgroup(n));
      });
    case ClassKind::poly:
      return at_scale(x, g, [&] {
        if (x.inner().admits_cyclic() && relative_series_reaches(g, n, true)) return true;
        return factors_admitted(x.inner(),
                                factor_difference(composition_factors(g, caps), composition_factors(n, caps)));
      });
  }
  return false;
}

bool member(const GroupClass& x, const Group& g, const Caps& caps) {
  switch (x.kind()) {
    case ClassKind::trivial: return g.is_trivial();
    case ClassKind::abelian: return is_abelian(g);
    case ClassKind::nilpotent: return is_nilpotent(g);
    case ClassKind::soluble: return is_soluble(g);
    case ClassKind::all: return true;
    case ClassKind::d0:
      if (g.is_trivial()) return true;
      if (is_soluble(g)) return false;
      return at_scale(x, g, [&] { return factors_admitted(x, composition_factors(g, caps)); });
    case ClassKind::d0xS:
      if (is_soluble(g)) return true;
      return at_scale(x, g, [&] {
        Oracle o(g, caps);
        return section_member(x, o, o.trivial());
      });
    case ClassKind::poly:
      if (x.inner().admits_cyclic() && is_soluble(g)) return true;
      return at_scale(x, g, [&] { return factors_admitted(x.inner(), composition_factors(g, caps)); });
  }
  return false;
}

bool member_by_series(const GroupClass& x, const std::vector<Group>& series, const Caps& caps) {
  if (series.empty()) throw InputError("empty witness series");
  if (!series.front().is_trivial()) throw InputError("witness series must start at the trivial group");
  const GroupClass base = x.is_poly() ? x.inner() : x;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (!series[i - 1].is_subgroup_of(series[i]) || !is_normal_in(series[i - 1], series[i]))
      throw InputError("witness series term " + std::to_string(i - 1) + " is not normal in the next term");
    if (!section_member(base, series[i], series[i - 1], caps)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- closure laws

bool ClosureReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed(); });
}

namespace {

LawResult undeclared(const std::string& law) {
  LawResult r{law};
  r.skip_notes.push_back("law not declared for this class");
  return r;
}

}  // namespace

ClosureReport closure_property_report(const GroupClass& x, const std::vector<NamedGroup>& corpus, const Caps& caps) {
  ClosureReport rep;
  rep.cls = x.descriptor();
  for (const auto& g : corpus) rep.corpus.push_back(g.name);
  const auto declared = x.declared_closures();

  std::vector<int> in_x(corpus.size(), -1);  // -1 undecidable
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    try {
      in_x[i] = member(x, corpus[i].group, caps) ? 1 : 0;
    } catch (const Undecidable&) {
    }
  }

  // Direct products.
  LawResult dp{"direct-product"};
  if (declared.count(Closure::normal_product) || declared.count(Closure::residual)) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = i; j < corpus.size(); ++j) {
        if (in_x[i] != 1 || in_x[j] != 1) continue;
        const auto& a = corpus[i].group;
        const auto& b = corpus[j].group;
        if (a.degree() + b.degree() > caps.degree ||
            a.order() * b.order() > static_cast<unsigned long>(caps.element)) {
          ++dp.skipped;
          continue;
        }
        try {
          ++dp.checks;
          if (!member(x, direct_product(a, b, caps), caps)) {
            ++dp.violations;
            dp.counterexamples.push_back(corpus[i].name + " x " + corpus[j].name);
          }
        } catch (const Undecidable&) {
          --dp.checks;
          ++dp.skipped;
        }
      }
  } else {
    dp = undeclared("direct-product");
  }
  rep.laws.push_back(dp);

  // Subgroups.
  LawResult sub{"subgroup"};
  if (declared.count(Closure::subgroup)) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (in_x[i] != 1) continue;
      if (corpus[i].group.order() > static_cast<unsigned long>(caps.subgroup)) {
        ++sub.skipped;
        sub.skip_notes.push_back(corpus[i].name + ": order exceeds subgroup cap");
        continue;
      }
      Oracle o(corpus[i].group, caps);
      const auto& lat = o.all_subgroups();
      for (const auto& h : lat.subgroups) {
        ++sub.checks;
        if (!member(x, h.group, caps)) {
          ++sub.violations;
          sub.counterexamples.push_back(corpus[i].name + " has a subgroup of order " + std::to_string(h.order()) +
                                        " outside the class");
        }
      }
    }
  } else {
    sub = undeclared("subgroup");
  }
  rep.laws.push_back(sub);

  // Quotients, extensions, normal products, residual closure: all over oracle normal subgroups.
  LawResult quo{"quotient"}, ext{"extension"}, np{"normal-product"}, res{"residual"};
  const bool dq = declared.count(Closure::quotient), de = declared.count(Closure::extension),
             dn = declared.count(Closure::normal_product), dr = declared.count(Closure::residual);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Group& g = corpus[i].group;
    if (g.order() > static_cast<unsigned long>(caps.element)) {
      for (LawResult* l : {&quo, &ext, &np, &res}) {
        ++l->skipped;
        l->skip_notes.push_back(corpus[i].name + ": order exceeds element cap");
      }
      continue;
    }
    try {
      Oracle o(g, caps);
      const auto& ns = o.normal_subgroups();
      std::vector<bool> sub_in(ns.size()), quo_in(ns.size());
      for (std::size_t k = 0; k < ns.size(); ++k) {
        sub_in[k] = member(x, ns[k].group, caps);
        quo_in[k] = section_member(x, o, ns[k]);
      }
      const bool g_in = in_x[i] == 1;
      for (std::size_t k = 0; k < ns.size(); ++k) {
        if (dq && g_in) {
          ++quo.checks;
          if (!quo_in[k]) {
            ++quo.violations;
            quo.counterexamples.push_back(corpus[i].name + " / normal subgroup of order " +
                                          std::to_string(ns[k].order()));
          }
        }
        if (de && sub_in[k] && quo_in[k]) {
          ++ext.checks;
          if (!g_in) {
            ++ext.violations;
            ext.counterexamples.push_back(corpus[i].name + " over normal subgroup of order " +
                                          std::to_string(ns[k].order()));
          }
        }
      }
      for (std::size_t a = 0; a < ns.size(); ++a)
        for (std::size_t b = a + 1; b < ns.size(); ++b) {
          if (dn && sub_in[a] && sub_in[b]) {
            ++np.checks;
            Subgroup j = o.join(ns[a], ns[b]);
            if (!member(x, j.group, caps)) {
              ++np.violations;
              np.counterexamples.push_back(corpus[i].name + ": product of normal subgroups of orders " +
                                           std::to_string(ns[a].order()) + ", " + std::to_string(ns[b].order()));
            }
          }
          if (dr && quo_in[a] && quo_in[b]) {
            ++res.checks;
            Subgroup m = o.meet(ns[a], ns[b]);
            if (!section_member(x, o, m)) {
              ++res.violations;
              res.counterexamples.push_back(corpus[i].name + ": intersection of normal subgroups of orders " +
                                            std::to_string(ns[a].order()) + ", " + std::to_string(ns[b].order()));
            }
          }
        }
    } catch (const Undecidable& e) {
      for (LawResult* l : {&quo, &ext, &np, &res}) {
        ++l->skipped;
        l->skip_notes.push_back(corpus[i].name + ": " + e.what());
      }
    }
  }
  rep.laws.push_back(dq ? quo : undeclared("quotient"));
  rep.laws.push_back(de ? ext : undeclared("extension"));
  rep.laws.push_back(dn ? np : undeclared("normal-product"));
  rep.laws.push_back(dr ? res : undeclared("residual"));
  return rep;
}

}  // namespace residua

#include "residua/oracle.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>

#include "residua/errors.hpp"

namespace residua {

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<std::size_t> ElementSet::ids() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// ---------------------------------------------------------------- helpers

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  auto f = prime_factors(n);
  return f.front() == f.back();
}

}  // namespace

std::vector<Permutation> enumerate_elements(const Group& g, const Caps& caps) {
  if (g.order() > static_cast<unsigned long>(caps.element))
    throw CapExceeded("group of order " + g.order().get_str() + " exceeds element cap " +
                      std::to_string(caps.element));
  const Bsgs& c = g.chain();
  std::vector<Permutation> cur{g.identity()};
  for (std::size_t lvl = c.levels(); lvl-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(cur.size() * c.orbit(lvl).size());
    for (const auto& p : cur)
      for (Point b : c.orbit(lvl)) next.push_back(p * c.transversal(lvl, b));
    cur.swap(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::string FactorDescriptor::label() const {
  if (kind == Kind::cyclic) return "C" + order.get_str();
  if (name) return *name;
  return "unidentified simple of order " + order.get_str();
}

bool operator<(const FactorDescriptor& a, const FactorDescriptor& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.order != b.order) return a.order < b.order;
  return a.name < b.name;
}

// ---------------------------------------------------------------- Oracle

struct Oracle::Impl {
  Group group;
  Caps caps;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;

  std::once_flag classes_once;
  std::vector<ElementSet> classes;
  std::once_flag normals_once;
  std::vector<Subgroup> normals;
  std::once_flag lattice_once;
  SubgroupLattice lattice;
};

Oracle::Oracle(const Group& g, const Caps& caps) : impl_(std::make_shared<Impl>()) {
  impl_->group = g;
  impl_->caps = caps;
  impl_->elements = enumerate_elements(g, caps);
  impl_->index.reserve(impl_->elements.size() * 2);
  for (std::size_t i = 0; i < impl_->elements.size(); ++i)
    impl_->index.emplace(impl_->elements[i], static_cast<std::uint32_t>(i));
}

const Group& Oracle::group() const { return impl_->group; }
const Caps& Oracle::caps() const { return impl_->caps; }
std::size_t Oracle::size() const { return impl_->elements.size(); }
const std::vector<Permutation>& Oracle::elements() const { return impl_->elements; }

std::optional<std::size_t> Oracle::find(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Oracle::id(const Permutation& p) const {
  auto f = find(p);
  if (!f) throw InputError("permutation is not an element of the oracle group");
  return *f;
}

ElementSet Oracle::set_of(const Group& h) const {
  if (h.degree() != group().degree()) throw InputError("degree mismatch in subgroup lookup");
  ElementSet s(size());
  for (const auto& p : enumerate_elements(h, Caps{h.degree(), size(), 0})) s.set(id(p));
  return s;
}

Group Oracle::group_of(const ElementSet& s) const {
  Bsgs chain(group().degree());
  std::vector<Permutation> gens;
  const BigInt target = static_cast<unsigned long>(s.count());
  for (std::size_t i : s.ids()) {
    if (chain.order() == target) break;
    if (chain.add_generator(impl_->elements[i])) gens.push_back(impl_->elements[i]);
  }
  if (chain.order() != target) throw InputError("element set is not a subgroup");
  return from_chain(std::move(gens), std::move(chain));
}

Subgroup Oracle::subgroup(const Group& h) const { return Subgroup{h, set_of(h)}; }

Subgroup Oracle::whole() const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.set(i);
  return Subgroup{group(), s};
}

Subgroup Oracle::trivial() const {
  ElementSet s(size());
  s.set(0);
  return Subgroup{Group::trivial(group().degree()), s};
}

Subgroup Oracle::join(const Subgroup& a, const Subgroup& b) const {
  if (b.set.subset_of(a.set)) return a;
  if (a.set.subset_of(b.set)) return b;
  return subgroup(residua::join(a.group, b.group));
}

Subgroup Oracle::meet(const Subgroup& a, const Subgroup& b) const {
  if (a.set.subset_of(b.set)) return a;
  if (b.set.subset_of(a.set)) return b;
  ElementSet s = a.set & b.set;
  return Subgroup{group_of(s), s};
}

const std::vector<ElementSet>& Oracle::conjugacy_classes() const {
  std::call_once(impl_->classes_once, [this] {
    const auto& els = impl_->elements;
    std::vector<Permutation> gens = group().generators(), invs;
    for (const auto& g : gens) invs.push_back(g.inverse());
    std::vector<bool> seen(els.size(), false);
    for (std::size_t x = 0; x < els.size(); ++x) {
      if (seen[x]) continue;
      ElementSet cls(els.size());
      std::vector<std::size_t> todo{x};
      seen[x] = true;
      cls.set(x);
      for (std::size_t i = 0; i < todo.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          std::size_t y = id(invs[k] * els[todo[i]] * gens[k]);
          if (!seen[y]) {
            seen[y] = true;
            cls.set(y);
            todo.push_back(y);
          }
        }
      impl_->classes.push_back(std::move(cls));
    }
  });
  return impl_->classes;
}

const std::vector<Subgroup>& Oracle::normal_subgroups() const {
  std::call_once(impl_->normals_once, [this] {
    std::vector<Subgroup> seeds;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen_seed;
    for (const auto& cls : conjugacy_classes()) {
      std::size_t rep = cls.ids().front();
      if (rep == 0) continue;
      Subgroup n = subgroup(normal_closure(group(), {impl_->elements[rep]}));
      if (seen_seed.emplace(n.set, seeds.size()).second) seeds.push_back(std::move(n));
    }
    std::vector<Subgroup> list{trivial()};
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> known{{list[0].set, 0}};
    for (std::size_t i = 0; i < list.size(); ++i)
      for (const auto& s : seeds) {
        if (s.set.subset_of(list[i].set)) continue;
        Subgroup j = join(list[i], s);
        if (known.emplace(j.set, list.size()).second) list.push_back(std::move(j));
      }
    std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.set < b.set;
    });
    impl_->normals = std::move(list);
  });
  return impl_->normals;
}

std::vector<Subgroup> Oracle::minimal_normal_subgroups() const {
  const auto& ns = normal_subgroups();
  std::vector<Subgroup> out;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < ns.size() && minimal; ++j)
      if (j != i && ns[j].order() < ns[i].order() && ns[j].set.subset_of(ns[i].set)) minimal = false;
    if (minimal) out.push_back(ns[i]);
  }
  return out;
}

Subgroup Oracle::socle() const {
  Subgroup s = trivial();
  for (const auto& m : minimal_normal_subgroups()) s = join(s, m);
  return s;
}

Subgroup Oracle::center() const {
  ElementSet s(size());
  const auto& gens = group().generators();
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& x = impl_->elements[i];
    bool central = true;
    for (const auto& g : gens)
      if (x * g != g * x) {
        central = false;
        break;
      }
    if (central) s.set(i);
  }
  return Subgroup{group_of(s), s};
}

Subgroup Oracle::fitting() const {
  Subgroup f = trivial();
  for (const auto& n : normal_subgroups())
    if (is_prime_power(n.order())) f = join(f, n);
  if (!is_nilpotent(f.group)) throw Error("internal: Fitting subgroup is not nilpotent");
  return f;
}

std::vector<Subgroup> Oracle::soluble_radical_tower() const {
  std::vector<Subgroup> tower{trivial()};
  for (;;) {
    const Subgroup& r = tower.back();
    Subgroup next = r;
    for (const auto& n : normal_subgroups())
      if (r.set.subset_of(n.set) && n.order() > r.order() && is_prime_power(n.order() / r.order()))
        next = join(next, n);
    if (next.order() == r.order()) break;
    tower.push_back(std::move(next));
  }
  return tower;
}

Subgroup Oracle::soluble_radical() const { return soluble_radical_tower().back(); }

const SubgroupLattice& Oracle::all_subgroups() const {
  const std::size_t n = size();
  if (n > impl_->caps.subgroup)
    throw CapExceeded("group of order " + std::to_string(n) + " exceeds subgroup-enumeration cap " +
                      std::to_string(impl_->caps.subgroup));
  std::call_once(impl_->lattice_once, [this] { impl_->lattice = build_lattice(); });
  return impl_->lattice;
}

SubgroupLattice Oracle::build_lattice() const {
  const std::size_t n = size();
  const auto& els = impl_->elements;
  std::vector<std::uint32_t> mul(n * n), inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<std::uint32_t>(id(els[a] * els[b]));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a * n + b] == 0) inv[a] = static_cast<std::uint32_t>(b);

  struct Entry {
    ElementSet set;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Entry> entries;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> known;
  auto add = [&](Entry e) {
    if (known.emplace(e.set, entries.size()).second) entries.push_back(std::move(e));
  };
  {
    ElementSet one(n);
    one.set(0);
    add(Entry{one, {}});
  }
  std::vector<std::uint32_t> cyclic_gens;
  for (std::size_t x = 1; x < n; ++x) {
    ElementSet c(n);
    c.set(0);
    for (std::size_t p = x; p != 0; p = mul[p * n + x]) c.set(p);
    if (!known.count(c)) cyclic_gens.push_back(static_cast<std::uint32_t>(x));
    add(Entry{c, {static_cast<std::uint32_t>(x)}});
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::uint32_t c : cyclic_gens) {
      if (entries[i].set.test(c)) continue;
      Entry e{entries[i].set, entries[i].gens};
      e.gens.push_back(c);
      std::vector<std::uint32_t> todo = {};
      std::vector<std::uint32_t> fresh;
      for (std::size_t x : entries[i].set.ids()) {
        std::uint32_t y = mul[x * n + c];
        if (!e.set.test(y)) {
          e.set.set(y);
          fresh.push_back(y);
        }
      }
      for (std::size_t k = 0; k < fresh.size(); ++k)
        for (std::uint32_t g : e.gens) {
          std::uint32_t y = mul[fresh[k] * n + g];
          if (!e.set.test(y)) {
            e.set.set(y);
            fresh.push_back(y);
          }
        }
      add(std::move(e));
    }
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    std::size_t ca = a.set.count(), cb = b.set.count();
    if (ca != cb) return ca < cb;
    return a.set < b.set;
  });
  SubgroupLattice lat;
  lat.parent = group();
  std::vector<std::uint32_t> ggens;
  for (const auto& g : group().generators()) ggens.push_back(static_cast<std::uint32_t>(id(g)));
  for (const auto& e : entries) {
    std::vector<Permutation> gens;
    for (auto g : e.gens) gens.push_back(els[g]);
    lat.subgroups.push_back(Subgroup{residua::subgroup(group(), gens), e.set});
    bool normal = true;
    for (auto g : ggens) {
      for (auto h : e.gens)
        if (!e.set.test(mul[mul[inv[g] * n + h] * n + g])) {
          normal = false;
          break;
        }
      if (!normal) break;
    }
    lat.normal.push_back(normal);
  }
  const std::size_t L = lat.subgroups.size();
  lat.maximal.assign(L, false);
  for (std::size_t i = 0; i + 1 < L; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < L && maximal; ++j)
      if (lat.subgroups[j].order() > lat.subgroups[i].order() &&
          lat.subgroups[i].set.subset_of(lat.subgroups[j].set))
        maximal = false;
    lat.maximal[i] = maximal;
  }
  return lat;
}

Subgroup Oracle::frattini() const {
  if (size() == 1 || fitting().order() == 1) return trivial();
  const SubgroupLattice& lat = all_subgroups();
  Subgroup phi = whole();
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    if (lat.maximal[i]) phi = meet(phi, lat.subgroups[i]);
  return phi;
}

// ---------------------------------------------------------------- identification

std::optional<std::string> identify_simple(std::uint64_t order, const std::vector<std::uint64_t>& fingerprint,
                                           const SimpleTable& table) {
  auto cands = table.with_order(order);
  if (cands.size() == 1 && (cands[0]->fingerprint.empty() || cands[0]->fingerprint == fingerprint))
    return cands[0]->name;
  for (const auto* r : cands)
    if (r->fingerprint == fingerprint) return r->name;
  return std::nullopt;
}

namespace {

std::vector<std::uint64_t> element_orders(const Oracle& o) {
  std::vector<std::uint64_t> out;
  for (const auto& cls : o.conjugacy_classes()) out.push_back(o.elements()[cls.ids().front()].element_order());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Orders of the cosets xM for x over class representatives of the oracle group.
std::vector<std::uint64_t> quotient_element_orders(const Oracle& o, const Subgroup& m) {
  std::vector<std::uint64_t> out;
  for (const auto& cls : o.conjugacy_classes()) {
    const Permutation& x = o.elements()[cls.ids().front()];
    std::uint64_t e = x.element_order();
    for (std::uint64_t d = 1; d <= e; ++d) {
      if (e % d) continue;
      if (m.set.test(o.id(x.pow(d)))) {
        out.push_back(d);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t moved_points(const Group& g) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < g.degree(); ++x)
    for (const auto& s : g.generators())
      if (s[x] != x) {
        ++c;
        break;
      }
  return c;
}

void factors_into(const Group& g, const Caps& caps, const SimpleTable& table, std::vector<FactorDescriptor>& out) {
  if (g.is_trivial()) return;
  Group d = derived_series(g).back();
  BigInt index = g.order() / d.order();
  if (index > 1) {
    if (!index.fits_ulong_p()) throw CapExceeded("soluble layer too large to factor");
    for (auto p : prime_factors(index.get_ui()))
      out.push_back(FactorDescriptor{FactorDescriptor::Kind::cyclic, static_cast<unsigned long>(p), std::nullopt});
  }
  if (d.is_trivial()) return;
  const std::size_t k = moved_points(d);
  if (k >= 5 && d.order() * 2 == factorial(k)) {
    std::string name = "A" + std::to_string(k);
    if (d.order().fits_ulong_p()) {
      auto cands = table.with_order(d.order().get_ui());
      for (const auto* r : cands)
        if (r->name == name) name = r->name;
    }
    out.push_back(FactorDescriptor{FactorDescriptor::Kind::nonabelian, d.order(), name});
    return;
  }
  Oracle o(d, caps);
  const auto& ns = o.normal_subgroups();
  const Subgroup& m = ns[ns.size() - 2];
  const std::uint64_t q = o.size() / m.order();
  FactorDescriptor f{FactorDescriptor::Kind::nonabelian, static_cast<unsigned long>(q), std::nullopt};
  f.name = identify_simple(q, quotient_element_orders(o, m), table);
  out.push_back(std::move(f));
  factors_into(m.group, caps, table, out);
}

}  // namespace

std::optional<std::string> identify_simple(const Group& witness, const Caps& caps, const SimpleTable& table) {
  Oracle o(witness, caps);
  return identify_simple(o.size(), element_orders(o), table);
}

std::vector<FactorDescriptor> composition_factors(const Group& g, const Caps& caps, const SimpleTable& table) {
  std::vector<FactorDescriptor> out;
  factors_into(g, caps, table, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FactorDescriptor> factor_difference(const std::vector<FactorDescriptor>& a,
                                                const std::vector<FactorDescriptor>& b) {
  std::vector<FactorDescriptor> rest = a;
  for (const auto& f : b) {
    auto it = std::find(rest.begin(), rest.end(), f);
    if (it == rest.end()) throw InputError("factor multiset difference: " + f.label() + " missing");
    rest.erase(it);
  }
  return rest;
}

}  // namespace residua

#include "residua/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "residua/errors.hpp"

namespace residua {

// ---------------------------------------------------------------- Bsgs

Bsgs::Bsgs(std::size_t degree) : degree_(degree) {}

const Permutation& Bsgs::transversal(std::size_t level, Point b) const {
  const Level& L = levels_[level];
  int s = L.slot[b];
  if (s < 0) throw InputError("point not in basic orbit");
  return L.reps[static_cast<std::size_t>(s)];
}

std::pair<Permutation, std::size_t> Bsgs::sift(const Permutation& g, std::size_t from) const {
  Permutation h = g;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    Point b = h[L.beta];
    int s = L.slot[b];
    if (s < 0) return {std::move(h), i};
    h = h * L.inv_reps[static_cast<std::size_t>(s)];
  }
  return {std::move(h), levels_.size()};
}

bool Bsgs::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw InputError("degree mismatch in membership test");
  return sift(g).first.is_identity();
}

BigInt Bsgs::order() const {
  BigInt n = 1;
  for (const Level& L : levels_) n *= static_cast<unsigned long>(L.orbit.size());
  return n;
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  for (const Level& L : levels_) b.push_back(L.beta);
  return b;
}

void Bsgs::rebuild(std::size_t level) {
  Level& L = levels_[level];
  L.gens.clear();
  for (std::size_t k = 0; k < strong_.size(); ++k) {
    bool fixes = true;
    for (std::size_t j = 0; j < level && fixes; ++j)
      fixes = strong_[k][levels_[j].beta] == levels_[j].beta;
    if (fixes) L.gens.push_back(k);
  }
  L.orbit.assign(1, L.beta);
  L.slot.assign(degree_, -1);
  L.slot[L.beta] = 0;
  L.reps.assign(1, Permutation(degree_));
  L.inv_reps.assign(1, Permutation(degree_));
  for (std::size_t idx = 0; idx < L.orbit.size(); ++idx) {
    Point b = L.orbit[idx];
    for (std::size_t k : L.gens) {
      Point c = strong_[k][b];
      if (L.slot[c] >= 0) continue;
      L.slot[c] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(c);
      Permutation u = L.reps[idx] * strong_[k];
      L.inv_reps.push_back(u.inverse());
      L.reps.push_back(std::move(u));
    }
  }
}

void Bsgs::insert_strong(const Permutation& residue, std::size_t level) {
  strong_.push_back(residue);
  if (level == levels_.size()) {
    Level L;
    L.beta = *residue.first_moved();
    levels_.push_back(std::move(L));
  }
  for (std::size_t l = 0; l <= level; ++l) rebuild(l);
}

void Bsgs::complete(std::size_t start) {
  std::size_t i = start;
  for (;;) {
    bool restarted = false;
    const Level* L = &levels_[i];
    for (std::size_t idx = 0; idx < L->orbit.size() && !restarted; ++idx) {
      for (std::size_t gi = 0; gi < L->gens.size(); ++gi) {
        const Permutation& s = strong_[L->gens[gi]];
        Point b = L->orbit[idx];
        Point c = s[b];
        Permutation us = L->reps[idx] * s;
        const Permutation& uc = L->reps[static_cast<std::size_t>(L->slot[c])];
        if (us == uc) continue;
        Permutation h = us * L->inv_reps[static_cast<std::size_t>(L->slot[c])];
        auto [res, j] = sift(h, i + 1);
        if (!res.is_identity()) {
          insert_strong(res, j);
          i = j;
          restarted = true;
          break;
        }
      }
    }
    if (restarted) continue;
    if (i == 0) break;
    --i;
  }
}

bool Bsgs::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw InputError("generator degree does not match group degree");
  auto [res, j] = sift(g, 0);
  if (res.is_identity()) return false;
  insert_strong(res, j);
  complete(j);
  return true;
}

// ---------------------------------------------------------------- Group

struct Group::Impl {
  std::size_t degree;
  std::vector<Permutation> generators;
  Bsgs chain;
  BigInt order;
};

Group::Group() : Group(trivial(1)) {}

Group::Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Group from_chain(std::vector<Permutation> generators, Bsgs chain) {
  auto impl = std::make_shared<Group::Impl>(Group::Impl{chain.degree(), {}, std::move(chain), 0});
  for (auto& g : generators)
    if (!g.is_identity()) impl->generators.push_back(std::move(g));
  impl->order = impl->chain.order();
  return Group(std::move(impl));
}

Group Group::generate(std::vector<Permutation> generators, std::size_t degree, const Caps& caps) {
  if (degree == 0) throw InputError("group degree must be positive");
  if (degree > caps.degree)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds degree cap " + std::to_string(caps.degree));
  Bsgs chain(degree);
  std::vector<Permutation> kept;
  for (auto& g : generators) {
    if (g.degree() != degree) throw InputError("inconsistent generator degrees");
    if (g.is_identity()) continue;
    chain.add_generator(g);
    if (std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(std::move(g));
  }
  return from_chain(std::move(kept), std::move(chain));
}

Group Group::trivial(std::size_t degree) {
  if (degree == 0) throw InputError("group degree must be positive");
  return from_chain({}, Bsgs(degree));
}

Group Group::symmetric(std::size_t n) {
  if (n < 2) return trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), Point{0});
  std::swap(tr[0], tr[1]);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return generate({Permutation(cyc), Permutation(tr)}, n, Caps{n, 0, 0});
}

Group Group::alternating(std::size_t n) {
  if (n < 3) return trivial(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(k);
    img[k] = 0;
    gens.emplace_back(img);
  }
  return generate(std::move(gens), n, Caps{n, 0, 0});
}

Group Group::cyclic(std::size_t n) {
  if (n < 2) return trivial(1);
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return generate({Permutation(img)}, n, Caps{n, 0, 0});
}

std::size_t Group::degree() const { return impl_->degree; }
const std::vector<Permutation>& Group::generators() const { return impl_->generators; }
const BigInt& Group::order() const { return impl_->order; }

std::uint64_t Group::order_u64() const {
  if (!impl_->order.fits_ulong_p()) throw CapExceeded("group order does not fit a machine word");
  return impl_->order.get_ui();
}

bool Group::contains(const Permutation& p) const { return impl_->chain.contains(p); }
bool Group::is_trivial() const { return impl_->order == 1; }

bool Group::is_subgroup_of(const Group& other) const {
  if (degree() != other.degree()) return false;
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool Group::same_as(const Group& other) const {
  return degree() == other.degree() && order() == other.order() && is_subgroup_of(other);
}

Permutation Group::identity() const { return Permutation(degree()); }
const Bsgs& Group::chain() const { return impl_->chain; }

// ---------------------------------------------------------------- constructions

Group subgroup(const Group& g, const std::vector<Permutation>& generators) {
  Bsgs chain(g.degree());
  std::vector<Permutation> kept;
  for (const auto& p : generators)
    if (chain.add_generator(p)) kept.push_back(p);
  return from_chain(std::move(kept), std::move(chain));
}

Group join(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw InputError("degree mismatch in join");
  Bsgs chain = a.chain();
  std::vector<Permutation> gens = a.generators();
  for (const auto& p : b.generators())
    if (chain.add_generator(p)) gens.push_back(p);
  return from_chain(std::move(gens), std::move(chain));
}

bool is_normal_in(const Group& h, const Group& g) {
  for (const auto& x : g.generators())
    for (const auto& y : h.generators())
      if (!h.contains(conjugate(y, x))) return false;
  return true;
}

namespace {

Group close_normally(const Group& g, Bsgs chain, std::vector<Permutation> gens) {
  std::deque<Permutation> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Permutation h = std::move(queue.front());
    queue.pop_front();
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(h, x);
      if (chain.add_generator(c)) {
        gens.push_back(c);
        queue.push_back(std::move(c));
      }
    }
  }
  return from_chain(std::move(gens), std::move(chain));
}

}  // namespace

Group normal_closure(const Group& g, const std::vector<Permutation>& seeds) {
  Bsgs chain(g.degree());
  std::vector<Permutation> gens;
  for (const auto& s : seeds) {
    if (s.degree() != g.degree()) throw InputError("seed degree mismatch");
    if (!g.contains(s)) throw InputError("normal closure seed is not an element of the group");
    if (chain.add_generator(s)) gens.push_back(s);
  }
  return close_normally(g, std::move(chain), std::move(gens));
}

Group commutator_subgroup(const Group& g, const Group& a, const Group& b) {
  std::vector<Permutation> seeds;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  Bsgs chain(g.degree());
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (chain.add_generator(s)) gens.push_back(s);
  return close_normally(g, std::move(chain), std::move(gens));
}

Group derived_subgroup(const Group& g) { return commutator_subgroup(g, g, g); }

std::vector<Group> derived_series(const Group& g) {
  std::vector<Group> out{g};
  for (;;) {
    Group next = derived_subgroup(out.back());
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Group> lower_central_series(const Group& g) {
  std::vector<Group> out{g};
  for (;;) {
    Group next = commutator_subgroup(g, out.back(), g);
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_nilpotent(const Group& g) { return lower_central_series(g).back().is_trivial(); }
bool is_soluble(const Group& g) { return derived_series(g).back().is_trivial(); }
bool is_perfect(const Group& g) { return derived_subgroup(g).order() == g.order(); }

Group direct_product(const Group& g, const Group& h, const Caps& caps) {
  const std::size_t m = g.degree(), n = h.degree();
  if (m + n > caps.degree) throw CapExceeded("direct product degree exceeds degree cap");
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) {
    std::vector<Point> img(m + n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t x = 0; x < m; ++x) img[x] = p[x];
    gens.emplace_back(img);
  }
  for (const auto& p : h.generators()) {
    std::vector<Point> img(m + n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t x = 0; x < n; ++x) img[m + x] = static_cast<Point>(m + p[x]);
    gens.emplace_back(img);
  }
  return Group::generate(std::move(gens), m + n, caps);
}

Group direct_power(const Group& g, std::size_t copies, const Caps& caps) {
  if (copies == 0) throw InputError("direct power needs at least one copy");
  Group out = g;
  for (std::size_t i = 1; i < copies; ++i) out = direct_product(out, g, caps);
  return out;
}

Group wreath_base(const Group& g, std::size_t blocks, const Caps& caps) {
  const std::size_t m = g.degree();
  if (blocks == 0) throw InputError("wreath base needs at least one block");
  if (m * blocks > caps.degree) throw CapExceeded("wreath product degree exceeds degree cap");
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < blocks; ++b)
    for (const auto& p : g.generators()) {
      std::vector<Point> img(m * blocks);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t x = 0; x < m; ++x) img[b * m + x] = static_cast<Point>(b * m + p[x]);
      gens.emplace_back(img);
    }
  return Group::generate(std::move(gens), m * blocks, caps);
}

Group wreath_product(const Group& g, const Group& t, const Caps& caps) {
  const std::size_t m = g.degree(), n = t.degree();
  if (m * n > caps.degree) throw CapExceeded("wreath product degree exceeds degree cap");
  std::vector<Permutation> gens = wreath_base(g, n, caps).generators();
  for (const auto& p : t.generators()) {
    std::vector<Point> img(m * n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < m; ++x) img[b * m + x] = static_cast<Point>(p[b] * m + x);
    gens.emplace_back(img);
  }
  return Group::generate(std::move(gens), m * n, caps);
}

std::vector<std::vector<Point>> orbits(const Group& g) {
  const std::size_t n = g.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Point> orb{static_cast<Point>(x)};
    seen[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& s : g.generators()) {
        Point y = s[orb[i]];
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const Group& g) { return orbits(g).size() == 1; }

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Size of the smallest block containing {0, b}.
std::size_t minimal_block_size(const Group& g, Point b) {
  const std::size_t n = g.degree();
  UnionFind uf(n);
  std::deque<std::pair<Point, Point>> queue;
  uf.unite(0, b);
  queue.emplace_back(0, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators())
      if (uf.unite(s[x], s[y])) queue.emplace_back(s[x], s[y]);
  }
  std::size_t root = uf.find(0), count = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (uf.find(x) == root) ++count;
  return count;
}

}  // namespace

bool is_primitive(const Group& g) {
  if (!is_transitive(g)) throw InputError("primitivity test needs a transitive group");
  for (std::size_t b = 1; b < g.degree(); ++b)
    if (minimal_block_size(g, static_cast<Point>(b)) < g.degree()) return false;
  return true;
}

Group center(const Group& g, std::size_t enumeration_cap) {
  const std::size_t n = g.degree();
  const auto orbs = orbits(g);
  // For each orbit, all maps on it commuting with every generator.
  std::vector<std::vector<std::vector<Point>>> local;
  std::size_t total = 1;
  for (const auto& orb : orbs) {
    std::vector<std::vector<Point>> cands;
    for (Point q : orb) {
      std::vector<int> z(n, -1);
      z[orb[0]] = q;
      std::vector<Point> todo{orb[0]};
      bool ok = true;
      for (std::size_t i = 0; i < todo.size() && ok; ++i) {
        Point x = todo[i];
        for (const auto& s : g.generators()) {
          Point sx = s[x];
          Point want = s[static_cast<Point>(z[x])];
          if (z[sx] < 0) {
            z[sx] = want;
            todo.push_back(sx);
          } else if (z[sx] != want) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      std::vector<bool> hit(n, false);
      std::vector<Point> img;
      for (Point x : orb) {
        if (hit[static_cast<std::size_t>(z[x])]) {
          ok = false;
          break;
        }
        hit[static_cast<std::size_t>(z[x])] = true;
        img.push_back(static_cast<Point>(z[x]));
      }
      if (ok) cands.push_back(std::move(img));
    }
    total *= cands.size();
    if (total > enumeration_cap) throw CapExceeded("centralizer candidate set exceeds enumeration cap");
    local.push_back(std::move(cands));
  }
  std::vector<Permutation> members;
  std::vector<std::size_t> idx(orbs.size(), 0);
  for (;;) {
    std::vector<Point> img(n);
    for (std::size_t o = 0; o < orbs.size(); ++o)
      for (std::size_t k = 0; k < orbs[o].size(); ++k) img[orbs[o][k]] = local[o][idx[o]][k];
    Permutation z(img);
    if (!z.is_identity() && g.contains(z)) members.push_back(std::move(z));
    std::size_t o = 0;
    while (o < orbs.size() && ++idx[o] == local[o].size()) idx[o++] = 0;
    if (o == orbs.size()) break;
  }
  return subgroup(g, members);
}

}  // namespace residua

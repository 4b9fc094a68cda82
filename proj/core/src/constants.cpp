#include "residua/constants.hpp"

#include <boost/math/constants/constants.hpp>

#include "residua/errors.hpp"
#include "residua/oracle.hpp"

namespace residua {

namespace mp = boost::multiprecision;

GroupClass constants_class(std::string_view descriptor) {
  GroupClass c = GroupClass::parse(descriptor);
  if (c.kind() == ClassKind::soluble || c.is_poly()) return c;
  if (c.kind() == ClassKind::all)
    throw InputError("the extension closure of 'all' contains every finite group; constants are undefined");
  throw InputError("constants are defined for extension-closed classes; use poly:" + c.descriptor());
}

int compute_m0(const GroupClass& y, const Caps& caps) {
  if (!y.admits_cyclic()) throw InputError("class " + y.descriptor() + " is not of full characteristic");
  for (int m = 5; m <= 8; ++m)
    if (!member(y, Group::alternating(static_cast<std::size_t>(m)), caps)) return m;
  throw Undecidable("A_5 .. A_8 all lie in " + y.descriptor() + "; m0 > 8 is outside the supported range");
}

RadicalValue compute_c0(int m0) {
  if (m0 < 5) throw InputError("m0 must be at least 5");
  return RadicalValue{factorial(static_cast<unsigned long>(m0 - 1)), static_cast<unsigned long>(m0 - 2)};
}

int maroti_tail_sign(int n, int m0) {
  return compare_powers(3, static_cast<unsigned long>(n * (m0 - 2)), factorial(static_cast<unsigned long>(m0 - 1)),
                        static_cast<unsigned long>(n - 1));
}

int analytic_tail(int m0) {
  for (int n = m0 + 1; n < 10000; ++n)
    if (maroti_tail_sign(n, m0) <= 0) return n;
  throw Error("analytic tail not found");
}

std::optional<std::pair<int, int>> n0_bounds(int m0) {
  if (m0 == 6) return std::pair{6, 13};
  if (m0 >= 7 && m0 <= 24) return std::pair{m0, m0 + 2};
  if (m0 >= 25) return std::pair{m0, m0};
  return std::nullopt;
}

N0Result compute_n0(const GroupClass& y, int m0, const PrimitiveCatalog& catalog, const Caps& caps) {
  N0Result r;
  if (m0 == 5) {
    r.n0 = 5;
    r.audit.push_back("m0 = 5: n0 = m0 by the degree bound for primitive groups not containing A_n");
    return r;
  }
  if (m0 != 6) {
    auto b = n0_bounds(m0);
    throw Undecidable("n0 for m0 = " + std::to_string(m0) + " is only bounded: " +
                      (b ? "[" + std::to_string(b->first) + ", " + std::to_string(b->second) + "]" : "unknown"));
  }
  const int tail = analytic_tail(m0);
  r.tail = tail;
  r.audit.push_back("analytic tail: least n > " + std::to_string(m0) + " with 3^(" + std::to_string(m0 - 2) +
                    "n) <= " + std::to_string(m0 - 1) + "!^(n-1) is " + std::to_string(tail));
  if (tail > 13) throw Error("analytic tail exceeds the bound 13 for m0 = 6");
  const BigInt f = factorial(static_cast<unsigned long>(m0 - 1));
  int last_violation = 0;
  for (int n = m0 + 1; n < tail; ++n) {
    if (!catalog.covers(static_cast<std::size_t>(n)))
      throw DataError("primitive catalog has no groups of degree " + std::to_string(n));
    for (const auto& e : catalog.by_degree.at(static_cast<std::size_t>(n))) {
      CheckedGroup c{e.label, static_cast<std::size_t>(n), e.group.order(), false, "", false};
      c.exceeds_bound =
          compare_powers(c.order, static_cast<unsigned long>(m0 - 2), f, static_cast<unsigned long>(n - 1)) > 0;
      try {
        c.membership = member(y, e.group, caps) ? "member" : "not member";
      } catch (const Undecidable&) {
        if (c.exceeds_bound) throw;
        c.membership = "undecidable at configured scale; order is within the bound";
      }
      c.violates = c.exceeds_bound && c.membership == "member";
      if (c.violates) last_violation = n;
      r.checked.push_back(std::move(c));
    }
  }
  r.n0 = std::max(m0, last_violation == 0 ? m0 : last_violation + 1);
  r.audit.push_back("catalog scan of degrees " + std::to_string(m0 + 1) + ".." + std::to_string(tail - 1) + ": " +
                    std::to_string(r.checked.size()) + " primitive groups, " +
                    (last_violation ? "last violation at degree " + std::to_string(last_violation)
                                    : std::string("no member exceeds c0^(n-1)")));
  return r;
}

BetaResult compute_beta(const GroupClass& y, int n0, const Caps& caps) {
  if (n0 > 6) throw Undecidable("beta search needs n0 <= 6, got " + std::to_string(n0));
  if (n0 < 2) throw InputError("beta search needs n0 >= 2");
  BetaResult r;
  r.beta = RadicalValue{1, 1};
  bool have = false;
  for (int n = 2; n <= n0; ++n) {
    Group sn = Group::symmetric(static_cast<std::size_t>(n));
    Oracle o(sn, caps);
    const auto& lat = o.all_subgroups();
    RadicalValue best_here{1, static_cast<unsigned long>(n - 1)};
    for (const auto& h : lat.subgroups) {
      ++r.subgroups_scanned;
      if (!member(y, h.group, caps)) continue;
      ++r.members;
      RadicalValue v{static_cast<unsigned long>(h.order()), static_cast<unsigned long>(n - 1)};
      if (compare(v, best_here) > 0) best_here = v;
      if (!have || compare(v, r.beta) > 0) {
        r.beta = v;
        r.degree = static_cast<std::size_t>(n);
        r.witness = h.group;
        have = true;
      }
    }
    r.audit.push_back("degree " + std::to_string(n) + ": " + std::to_string(lat.subgroups.size()) +
                      " subgroups, largest class member gives " + best_here.symbolic());
  }
  return r;
}

Real lambda_of(const SimpleGroupRecord& s, const RadicalValue& beta) {
  const Real k = Real(beta.index);
  return k * mp::log(Real(s.order)) / (mp::log(to_real(beta.base)) + k * mp::log(Real(s.out_order)));
}

Real tail_function(const Real& x, const RadicalValue& beta) {
  const Real log2x = mp::log(x) / mp::log(Real(2));
  return mp::log(x) / (mp::log(to_real(beta.base)) / Real(beta.index) + mp::log(log2x));
}

LambdaResult compute_lambda_gamma(const GroupClass& y, const RadicalValue& beta, const SimpleTable& table,
                                  const Real& tolerance) {
  LambdaResult r;
  const Real e = boost::math::constants::e<Real>();
  const Real beta_val = beta.value();

  // Candidate over every excluded row the table lists.
  const SimpleGroupRecord* cand = nullptr;
  Real cand_lambda;
  for (const auto& s : table.records) {
    if (y.admits_simple(s.name)) continue;
    Real l = lambda_of(s, beta);
    if (!cand || l < cand_lambda) {
      cand = &s;
      cand_lambda = l;
    }
  }
  if (!cand) throw DataError("simple table lists no group outside " + y.descriptor());
  r.audit.push_back("candidate minimum over table rows: " + cand->name + " with lambda " + format_real(cand_lambda, 12));

  // Tail: f(x) = log x / log(beta log2 x) is increasing once beta log2 x > e.
  const Real x_mono = mp::pow(Real(2), e / beta_val);
  std::uint64_t lo = static_cast<std::uint64_t>(mp::floor(x_mono).convert_to<unsigned long long>()) + 1;
  if (lo < 3) lo = 3;
  auto above = [&](std::uint64_t x) { return tail_function(Real(x), beta) > cand_lambda; };
  std::uint64_t hi = lo;
  while (!above(hi)) {
    if (hi > (std::uint64_t{1} << 60)) throw Error("tail threshold not found");
    hi *= 2;
  }
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (above(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  r.threshold_b = lo;
  r.audit.push_back("threshold B = " + std::to_string(r.threshold_b) + ": f(B) = " +
                    format_real(tail_function(Real(r.threshold_b), beta), 12) + " exceeds the candidate");
  if (table.complete_through < r.threshold_b)
    throw DataError("simple table complete only through " + std::to_string(table.complete_through) +
                    "; rows missing in (" + std::to_string(table.complete_through) + ", " +
                    std::to_string(r.threshold_b) + ")");

  // Monotone certificate: derivative sign at B, and samples on [B, 10B].
  bool mono = beta_val * mp::log(Real(r.threshold_b)) / mp::log(Real(2)) > e;
  Real prev = tail_function(Real(r.threshold_b), beta);
  for (int i = 1; i <= 1000 && mono; ++i) {
    Real x = Real(r.threshold_b) * (Real(1) + Real(9) * Real(i) / Real(1000));
    Real v = tail_function(x, beta);
    if (!(v > prev)) mono = false;
    prev = v;
  }
  r.tail_monotone = mono;

  // Exact minimum over excluded rows below B.
  const SimpleGroupRecord* best = nullptr;
  for (const auto& s : table.records) {
    if (s.order >= r.threshold_b || y.admits_simple(s.name)) continue;
    LambdaCandidate c{s.name, s.order, s.out_order, lambda_of(s, beta)};
    if (!best || c.lambda < r.lambda) {
      best = &s;
      r.lambda = c.lambda;
    }
    r.below_b.push_back(std::move(c));
  }
  if (!best) throw Error("no excluded simple group below the threshold");
  if (best->name != cand->name) throw Error("tail certificate inconsistent with the candidate minimum");
  r.s0 = *best;
  r.gamma = r.lambda / (Real(1) + r.lambda);
  const unsigned long k = beta.index;
  r.gamma_ratio = LogRatio{big_pow(static_cast<unsigned long>(best->order), k),
                           beta.base * big_pow(static_cast<unsigned long>(best->aut_order()), k)};
  r.gamma_bounds = certify_bounds(r.gamma_ratio, tolerance);
  r.audit.push_back("gamma = log(" + std::to_string(best->order) + "^" + std::to_string(k) + ") / log(" +
                    beta.base.get_str() + " * " + std::to_string(best->aut_order()) + "^" + std::to_string(k) +
                    "), certified in [" + r.gamma_bounds.lower.str() + ", " + r.gamma_bounds.upper.str() + "]");
  return r;
}

KohlReport kohl_sanity(const SimpleTable& table) {
  KohlReport r;
  for (const auto& s : table.records) {
    if (s.out_order >= 64 || (std::uint64_t{1} << s.out_order) >= s.order) {
      r.kohl_holds = false;
      r.failures.push_back(s.name + ": |Out| = " + std::to_string(s.out_order) + " is not below log2 " +
                           std::to_string(s.order));
    }
    if (s.order > 60 && s.order <= 3960) ++r.census_60_3960;
    if (s.order >= 168 && s.order <= 4529 && s.name != "A6") ++r.census_168_4529_without_a6;
  }
  return r;
}

ConstantsReport compute_constants(const GroupClass& y, const Caps& caps, const SimpleTable& table,
                                  const PrimitiveCatalog& catalog) {
  ConstantsReport rep;
  rep.cls = y;
  rep.requested = y.descriptor();
  if (y.kind() == ClassKind::soluble)
    rep.audit.push_back("soluble is its own extension closure; computed as poly:nilpotent");
  rep.m0 = compute_m0(y, caps);
  rep.audit.push_back("m0 = " + std::to_string(rep.m0) + ": A" + std::to_string(rep.m0) + " is the first alternating group outside the class");
  rep.c0 = compute_c0(rep.m0);
  rep.n0 = compute_n0(y, rep.m0, catalog, caps);
  rep.beta = compute_beta(y, rep.n0.n0, caps);
  rep.beta_equals_c0 = compare(rep.beta.beta, rep.c0) == 0;
  rep.lambda = compute_lambda_gamma(y, rep.beta.beta, table);
  return rep;
}

}  // namespace residua

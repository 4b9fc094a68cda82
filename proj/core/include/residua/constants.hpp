#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/catalog.hpp"
#include "residua/exact.hpp"
#include "residua/group.hpp"
#include "residua/group_class.hpp"

namespace residua {

// The class Y whose constants are computed: poly(X) for a descriptor with
// "poly:", or soluble (treated as poly(nilpotent)). Other classes are rejected.
GroupClass constants_class(std::string_view descriptor);

// Least m >= 5 with A_m not in Y (searched up to 8).
int compute_m0(const GroupClass& y, const Caps& caps = {});

// ((m0-1)!)^(1/(m0-2)).
RadicalValue compute_c0(int m0);

// Sign of 3^(n(m0-2)) - ((m0-1)!)^(n-1): positive means 3^n > c0^(n-1).
int maroti_tail_sign(int n, int m0);
// Least n > m0 with 3^n <= c0^(n-1).
int analytic_tail(int m0);
// Bound formulas for n0: m0 = 6 -> [6, 13]; 7..24 -> [m0, m0+2]; >= 25 -> [m0, m0].
std::optional<std::pair<int, int>> n0_bounds(int m0);

struct CheckedGroup {
  std::string label;
  std::size_t degree = 0;
  BigInt order;
  bool exceeds_bound = false;  // |G|^(m0-2) > ((m0-1)!)^(n-1)
  std::string membership;      // "member", "not member", or an undecidable note
  bool violates = false;
};

struct N0Result {
  int n0 = 0;
  std::optional<int> tail;
  std::vector<CheckedGroup> checked;
  std::vector<std::string> audit;
};

// m0 = 5: n0 = 5. m0 = 6: analytic tail plus a catalog scan of degrees
// m0+1 .. tail-1; every degree in that range must be present in the catalog.
N0Result compute_n0(const GroupClass& y, int m0, const PrimitiveCatalog& catalog, const Caps& caps = {});

struct BetaResult {
  RadicalValue beta;
  std::size_t degree = 0;
  Group witness;
  std::size_t subgroups_scanned = 0;
  std::size_t members = 0;
  std::vector<std::string> audit;
};

// max |G|^(1/(n-1)) over Y-subgroups G of S_n, 2 <= n <= n0 <= 6. Ties keep the smaller n.
BetaResult compute_beta(const GroupClass& y, int n0, const Caps& caps = {});

struct LambdaCandidate {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t out_order = 0;
  Real lambda;
};

struct LambdaResult {
  Real lambda;
  SimpleGroupRecord s0;
  Real gamma;
  LogRatio gamma_ratio;  // gamma = log P / log Q exactly
  CertifiedBounds gamma_bounds;
  std::uint64_t threshold_b = 0;
  std::vector<LambdaCandidate> below_b;  // excluded groups with order < B, ascending
  bool tail_monotone = false;
  std::vector<std::string> audit;
};

// log|S| / log(beta |Out(S)|).
Real lambda_of(const SimpleGroupRecord& s, const RadicalValue& beta);
// log x / log(beta log2 x).
Real tail_function(const Real& x, const RadicalValue& beta);

LambdaResult compute_lambda_gamma(const GroupClass& y, const RadicalValue& beta, const SimpleTable& table,
                                  const Real& tolerance = Real("1e-9"));

struct KohlReport {
  bool kohl_holds = true;
  std::vector<std::string> failures;
  std::size_t census_60_3960 = 0;
  std::size_t census_168_4529_without_a6 = 0;
  bool ok() const { return kohl_holds && census_60_3960 == 8 && census_168_4529_without_a6 == 8; }
};

// |Out(S)| < log2|S| on every row (as 2^out < order), plus the two census counts
// (60, 3960] and [168, 4529] without A6.
KohlReport kohl_sanity(const SimpleTable& table);

struct ConstantsReport {
  GroupClass cls;
  std::string requested;
  int m0 = 0;
  RadicalValue c0;
  N0Result n0;
  BetaResult beta;
  bool beta_equals_c0 = false;
  LambdaResult lambda;
  std::vector<std::string> audit;
};

ConstantsReport compute_constants(const GroupClass& y, const Caps& caps, const SimpleTable& table,
                                  const PrimitiveCatalog& catalog);

}  // namespace residua

#pragma once

#include <string>
#include <vector>

#include "residua/catalog.hpp"
#include "residua/group.hpp"
#include "residua/group_class.hpp"

namespace residua {

struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;
  bool passed() const;
  std::size_t checks() const;
  std::size_t violations() const;
};

// Corpus groups whose order is within the oracle element cap, in corpus order.
std::vector<NamedGroup> oracle_corpus(const Caps& caps = {});

// Orders, membership of generators, inverses, normality of series terms, product orders.
SuiteReport perm_core_suite(const std::vector<NamedGroup>& corpus, const Caps& caps = {});

// Fast-path residuals (abelian, nilpotent, soluble) and radicals (nilpotent,
// soluble) against the generic oracle constructions, for groups of order <= max_order.
SuiteReport oracle_equivalence_suite(const std::vector<NamedGroup>& corpus, const Caps& caps = {},
                                     std::size_t max_order = 200);

// Residual, radical, closure-interdependence and extension-closure laws.
SuiteReport closure_law_suite(const std::vector<NamedGroup>& corpus, const Caps& caps = {});

// Frattini-condition bounds on groups with trivial Frattini subgroup.
SuiteReport frattini_suite(const std::vector<NamedGroup>& corpus, const Caps& caps = {});

// Table, catalog and exact tail comparisons.
SuiteReport data_suite(const SimpleTable& table, const PrimitiveCatalog& catalog);

}  // namespace residua

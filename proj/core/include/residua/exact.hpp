#pragma once

#include <string>
#include <utility>

#include "residua/bigint.hpp"

namespace residua {

// base^(1/index), kept symbolic.
struct RadicalValue {
  BigInt base = 1;
  unsigned long index = 1;

  Real value() const;
  std::string symbolic() const;  // "24^(1/3)"
};

// Sign of a - b, decided by comparing a.base^b.index with b.base^a.index.
int compare(const RadicalValue& a, const RadicalValue& b);

struct Fraction {
  BigInt num = 0;
  BigInt den = 1;
  Real value() const;
  std::string str() const;
};

// log P / log Q for integers P, Q > 1.
struct LogRatio {
  BigInt p = 2;
  BigInt q = 2;

  Real value() const;
  // Sign of (log P / log Q) - num/den, decided by P^den vs Q^num.
  int compare_to(const Fraction& f) const;
};

struct CertifiedBounds {
  Fraction upper;  // upper >= ratio, certified exactly
  Fraction lower;  // lower <= ratio, certified exactly
};

// Continued-fraction convergents of the ratio, taking the first one on each
// side within `tolerance` of the high-precision value.
CertifiedBounds certify_bounds(const LogRatio& r, const Real& tolerance);

// Sign of x^a - y^b for nonnegative integer exponents.
int compare_powers(const BigInt& x, unsigned long a, const BigInt& y, unsigned long b);

}  // namespace residua

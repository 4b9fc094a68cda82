#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>

namespace residua {

using BigInt = mpz_class;
using Real = boost::multiprecision::cpp_bin_float_50;

inline BigInt big_pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline Real to_real(const BigInt& v) { return Real(v.get_str()); }

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// Fixed-point decimal rendering with `digits` places after the point.
std::string format_real(const Real& v, int digits);

}  // namespace residua

#include "residua/exact.hpp"

#include <sstream>

#include "residua/errors.hpp"

namespace residua {

std::string format_real(const Real& v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

Real RadicalValue::value() const { return boost::multiprecision::pow(to_real(base), Real(1) / Real(index)); }

std::string RadicalValue::symbolic() const {
  if (index == 1) return base.get_str();
  return base.get_str() + "^(1/" + std::to_string(index) + ")";
}

int compare_powers(const BigInt& x, unsigned long a, const BigInt& y, unsigned long b) {
  return sgn(BigInt(big_pow(x, a) - big_pow(y, b)));
}

int compare(const RadicalValue& a, const RadicalValue& b) { return compare_powers(a.base, b.index, b.base, a.index); }

Real Fraction::value() const { return to_real(num) / to_real(den); }
std::string Fraction::str() const { return num.get_str() + "/" + den.get_str(); }

Real LogRatio::value() const { return boost::multiprecision::log(to_real(p)) / boost::multiprecision::log(to_real(q)); }

int LogRatio::compare_to(const Fraction& f) const {
  // log P / log Q vs N/D  <=>  D log P vs N log Q  <=>  P^D vs Q^N
  if (!f.den.fits_ulong_p() || !f.num.fits_ulong_p() || f.den <= 0 || f.num < 0)
    throw InputError("fraction out of range for exact comparison");
  return compare_powers(p, f.den.get_ui(), q, f.num.get_ui());
}

CertifiedBounds certify_bounds(const LogRatio& r, const Real& tolerance) {
  const Real x = r.value();
  Real rest = x;
  BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  CertifiedBounds out;
  bool have_upper = false, have_lower = false;
  for (int step = 0; step < 200 && !(have_upper && have_lower); ++step) {
    Real fl = boost::multiprecision::floor(rest);
    if (fl > Real(1e18)) break;
    BigInt a = static_cast<unsigned long>(fl.convert_to<unsigned long long>());
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Fraction f{h, k};
    const Real err = boost::multiprecision::abs(f.value() - x);
    int side = r.compare_to(f);
    if (side <= 0 && !have_upper && err < tolerance) {
      out.upper = f;
      have_upper = true;
    }
    if (side >= 0 && !have_lower && err < tolerance) {
      out.lower = f;
      have_lower = true;
    }
    Real frac = rest - fl;
    if (frac == 0) break;
    rest = Real(1) / frac;
  }
  if (!have_upper || !have_lower) throw Error("could not certify rational bounds for log ratio");
  return out;
}

}  // namespace residua

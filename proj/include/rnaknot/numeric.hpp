#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace rnaknot {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// 50 decimal digits (~166 bits of mantissa). Tail probabilities at n in the
// hundreds underflow double, so every real-valued quantity uses this type.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<50>,
    boost::multiprecision::et_off>;

inline Real to_real(const BigInt& v) { return Real(v); }

inline Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) /
         Real(boost::multiprecision::denominator(q));
}

// Fixed-point decimal rendering; never scientific notation.
inline std::string format_fixed(const Real& x, int digits) {
  return x.str(digits, std::ios_base::fixed);
}

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

// Standard normal CDF and density.
inline Real normal_cdf(const Real& x) {
  return (1 + boost::multiprecision::erf(x / boost::multiprecision::sqrt(Real(2)))) / 2;
}

inline Real normal_pdf(const Real& x) {
  return boost::multiprecision::exp(-x * x / 2) /
         boost::multiprecision::sqrt(2 * pi_real());
}

}  // namespace rnaknot

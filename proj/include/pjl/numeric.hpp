#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pjl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& x);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

BigInt pow_int(const BigInt& base, unsigned e);
Rational pow_rat(const Rational& base, unsigned e);
BigInt binomial(long long n, long long k);
BigInt factorial(unsigned n);

double to_double(const Rational& x);
// Fixed-point decimal with `digits` fractional digits, truncated toward zero.
std::string to_decimal(const Rational& x, int digits);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_rat(const Rational& x);
BigInt ceil_rat(const Rational& x);
BigInt isqrt(const BigInt& x);

// Closed interval [lo, hi] with rational endpoints. Operations round
// outward onto the dyadic grid 2^-bits so denominators stay bounded.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Interval add(const Interval& a, const Interval& b, int bits);
Interval sub(const Interval& a, const Interval& b, int bits);
// Multiplication and division assume nonnegative operands (all uses here are).
Interval mul_nonneg(const Interval& a, const Interval& b, int bits);
Interval div_pos(const Interval& a, const Interval& b, int bits);
Interval sqrt_interval(const Rational& x, int bits);
Interval sqrt_interval(const Interval& x, int bits);
Interval pow_nonneg(const Interval& a, unsigned e, int bits);
// sqrt(3)^n as an enclosure.
Interval sqrt3_pow(unsigned n, int bits);

int bits_for_digits(int digits);

}  // namespace pjl

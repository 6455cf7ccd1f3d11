#include "pjl/numeric.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace pjl {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(BigInt(s.substr(0, slash)), d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument(fmt::format("not a rational: '{}'", s));
  }
}

BigInt pow_int(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Rational pow_rat(const Rational& base, unsigned e) {
  return Rational(pow_int(numerator(base), e), pow_int(denominator(base), e));
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_decimal(const Rational& x, int digits) {
  bool neg = x < 0;
  Rational a = neg ? Rational(-x) : x;
  BigInt scale = pow_int(10, static_cast<unsigned>(digits));
  BigInt scaled = numerator(a) * scale / denominator(a);
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return neg ? "-" + s : s;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_rat(const Rational& x) { return floor_div(numerator(x), denominator(x)); }

BigInt ceil_rat(const Rational& x) { return -floor_div(-numerator(x), denominator(x)); }

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(x);
}

namespace {

Rational down(const Rational& x, int bits) {
  BigInt s = pow_int(2, bits);
  return Rational(floor_rat(x * s), s);
}

Rational up(const Rational& x, int bits) {
  BigInt s = pow_int(2, bits);
  return Rational(ceil_rat(x * s), s);
}

}  // namespace

Interval add(const Interval& a, const Interval& b, int bits) {
  return {down(a.lo + b.lo, bits), up(a.hi + b.hi, bits)};
}

Interval sub(const Interval& a, const Interval& b, int bits) {
  return {down(a.lo - b.hi, bits), up(a.hi - b.lo, bits)};
}

Interval mul_nonneg(const Interval& a, const Interval& b, int bits) {
  if (a.lo < 0 || b.lo < 0) throw std::domain_error("mul_nonneg: negative operand");
  return {down(a.lo * b.lo, bits), up(a.hi * b.hi, bits)};
}

Interval div_pos(const Interval& a, const Interval& b, int bits) {
  if (a.lo < 0 || b.lo <= 0) throw std::domain_error("div_pos: operand sign");
  return {down(a.lo / b.hi, bits), up(a.hi / b.lo, bits)};
}

Interval sqrt_interval(const Rational& x, int bits) {
  if (x < 0) throw std::domain_error("sqrt of negative");
  BigInt s = pow_int(2, bits);
  BigInt lo_arg = floor_rat(x * s * s);
  BigInt hi_arg = ceil_rat(x * s * s);
  BigInt lo = isqrt(lo_arg);
  BigInt hi = isqrt(hi_arg);
  if (hi * hi != hi_arg) ++hi;
  return {Rational(lo, s), Rational(hi, s)};
}

Interval sqrt_interval(const Interval& x, int bits) {
  return {sqrt_interval(x.lo, bits).lo, sqrt_interval(x.hi, bits).hi};
}

Interval pow_nonneg(const Interval& a, unsigned e, int bits) {
  Interval r = Interval::point(1);
  for (unsigned i = 0; i < e; ++i) r = mul_nonneg(r, a, bits);
  return r;
}

Interval sqrt3_pow(unsigned n, int bits) {
  Interval whole = Interval::point(Rational(pow_int(3, n / 2)));
  if (n % 2 == 0) return whole;
  return mul_nonneg(whole, sqrt_interval(Rational(3), bits), bits);
}

int bits_for_digits(int digits) {
  return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 24;
}

}  // namespace pjl

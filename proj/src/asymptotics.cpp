#include "pjl/asymptotics.hpp"

#include "pjl/partitions.hpp"

#include <fmt/format.h>

#include <map>
#include <mutex>

namespace pjl {

Rational q(int t) {
  if (t < 1) throw std::invalid_argument(fmt::format("q_t needs t >= 1, got {}", t));
  Rational v(1, 2);
  for (int i = 2; i <= t; ++i) v *= Rational(i - 1, pow_int(2, i) - i - 1);
  return v;
}

namespace {

Interval r_at_bits(int t, int bits) {
  Interval v = Interval::point(0);
  if (t == 1) return v;
  v = mul_nonneg(Interval::point(Rational(4, 9)), sqrt_interval(Rational(3), bits), bits);
  for (int s = 3; s <= t; ++s) {
    Interval den = sub(sqrt3_pow(s, bits), Interval::point(s + 1), bits);
    Interval coef = div_pos(Interval::point(s - 1), den, bits);
    Rational base(pow_int(2, s), s + 1);
    Interval power = Interval::point(pow_rat(base, (s - 1) / 2));
    if ((s - 1) % 2) power = mul_nonneg(power, sqrt_interval(base, bits), bits);
    Interval extra = mul_nonneg(mul_nonneg(Interval::point(2), power, bits), Interval::point(q(s - 1)), bits);
    v = add(mul_nonneg(coef, v, bits), extra, bits);
  }
  return v;
}

}  // namespace

Interval r(int t, int digits) {
  if (t < 1) throw std::invalid_argument(fmt::format("r_t needs t >= 1, got {}", t));
  const Rational target(1, pow_int(10, digits));
  for (int bits = bits_for_digits(digits) + 4 * t;; bits *= 2) {
    Interval v = r_at_bits(t, bits);
    if (v.width() <= target) return v;
  }
}

std::string weight_name(Weight w) {
  switch (w) {
    case Weight::one: return "one";
    case Weight::t: return "t";
    case Weight::t_plus_1: return "t+1";
    case Weight::colored: return "colored";
    case Weight::k_pow: return "k^t";
    case Weight::t_k_pow: return "t*k^t";
    case Weight::t_half_pow: return "t*2^-t";
    case Weight::t_half_pow_next: return "t*2^-(t+1)";
    case Weight::base: return "base";
    case Weight::passing: return "passing";
    case Weight::gamma_b: return "gamma-b";
  }
  return "?";
}

Weight parse_weight(const std::string& s) {
  for (Weight w : {Weight::one, Weight::t, Weight::t_plus_1, Weight::colored, Weight::k_pow, Weight::t_k_pow,
                   Weight::t_half_pow, Weight::t_half_pow_next, Weight::base, Weight::passing, Weight::gamma_b})
    if (weight_name(w) == s) return w;
  if (s == "N") return Weight::one;
  if (s == "M") return Weight::t_plus_1;
  if (s == "C") return Weight::colored;
  if (s == "B") return Weight::base;
  if (s == "P") return Weight::passing;
  throw std::invalid_argument(fmt::format("unknown weight '{}'", s));
}

Rational gamma_term(const GammaSpec& spec, int t) {
  const Rational qt = q(t);
  const Rational half_pow(1, pow_int(2, t));
  const Rational kt(pow_int(spec.k, t));
  switch (spec.weight) {
    case Weight::one: return qt;
    case Weight::t: return qt * t;
    case Weight::t_plus_1: return qt * (t + 1);
    case Weight::colored: return qt * qt * t / 2;
    case Weight::k_pow: return qt * kt;
    case Weight::t_k_pow: return qt * kt * t;
    case Weight::t_half_pow: return qt * half_pow * t;
    case Weight::t_half_pow_next: return qt * half_pow * t / 2;
    case Weight::base: return qt * half_pow * t * 3 / 2;
    case Weight::passing: return qt * kt * (1 + spec.k * t - t);
    case Weight::gamma_b: {
      const int b = spec.b;
      BigInt num = factorial(t - 1) * pow_int(b - 1, static_cast<unsigned>((t + 2) * (t - 1) / 2));
      BigInt den = b;
      for (int i = 2; i <= t; ++i) den *= (b - 1) * pow_int(b, i) - pow_int(b - 1, i) * (b + i - 1);
      return Rational(num, den);
    }
  }
  throw std::logic_error("gamma_term: unknown weight");
}

GammaResult gamma(const GammaSpec& spec) {
  if (spec.terms < 1) throw std::invalid_argument("gamma needs at least one term");
  if (spec.digits < 10) throw std::invalid_argument("gamma needs digits >= 10");
  if (spec.weight == Weight::gamma_b && spec.b < 2) throw std::invalid_argument("gamma_b needs b >= 2");
  GammaResult res;
  const Rational cutoff(1, pow_int(10, spec.digits + 5));
  Rational prev = 0, last = 0;
  // gamma_b runs to its cutoff; terms caps it
  const int limit = spec.weight == Weight::gamma_b ? std::max(spec.terms, 200) : spec.terms;
  for (int t = 1; t <= limit; ++t) {
    Rational term = gamma_term(spec, t);
    res.partial += term;
    res.trace.push_back(res.partial);
    prev = last;
    last = term;
    res.terms_used = t;
    if (spec.weight == Weight::gamma_b && term < cutoff) break;
  }
  if (prev > 0 && last > 0 && last < prev) {
    double ratio = to_double(last / prev);
    res.tail_estimate = to_double(last) * ratio / (1 - ratio);
  }
  return res;
}

CtBoundReport verify_ct_bounds(int t_max, int n_max, int digits) {
  CtBoundReport rep;
  const int bits = bits_for_digits(digits) + 64;
  for (int t = 1; t <= t_max; ++t) {
    const Interval rt = r(t, digits);
    const Rational qt = q(t);
    for (int n = 1; n <= n_max; ++n) {
      CtBoundRow row;
      row.t = t;
      row.n = n;
      row.c = c(t, n);
      row.upper = qt * Rational(pow_int(2, n));
      Interval sub_term = mul_nonneg(rt, sqrt3_pow(n, bits), bits);
      row.lower = sub(Interval::point(row.upper), sub_term, bits);
      const Rational cv(row.c);
      row.upper_holds = cv <= row.upper;
      row.lower_certified = row.lower.hi <= cv;
      row.lower_violated = row.lower.lo > cv;
      if (!row.upper_holds || row.lower_violated) ++rep.violations;
      if (!row.lower_certified && !row.lower_violated) ++rep.uncertified;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

LimitTrace empirical_limits(Weight weight, int n_max, int terms) {
  if (weight != Weight::one && weight != Weight::t)
    throw std::invalid_argument("empirical_limits supports weights one and t");
  LimitTrace out;
  out.weight = weight;
  out.gamma = gamma({weight, terms, 50, 2, 3}).partial;
  std::vector<BigInt> f(n_max + 1, 0);
  for (int m = 1; m <= n_max; ++m)
    for (int t = 1; t <= max_parts(m); ++t) f[m] += (weight == Weight::t ? t : 1) * c(t, m);
  BigInt s = 0;
  for (int n = 1; n <= n_max; ++n) {
    BigInt conv = 0;
    for (int m = 1; m < n; ++m) conv += f[m] * f[n - m];
    const BigInt p2 = pow_int(2, n);
    out.rows.push_back({n, Rational(f[n], p2), Rational(s, p2), Rational(conv, p2 * n)});
    s += f[n];
  }
  return out;
}

}  // namespace pjl

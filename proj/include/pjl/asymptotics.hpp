#pragma once

#include "pjl/numeric.hpp"

#include <string>
#include <vector>

namespace pjl {

// q_1 = 1/2, q_t = (t-1)/(2^t - t - 1) q_{t-1}
Rational q(int t);

// Enclosure of r_t with width <= 10^-digits.
Interval r(int t, int digits = 50);

enum class Weight {
  one,              // gamma_N'
  t,
  t_plus_1,         // gamma_M'
  colored,          // (1/2) sum t q_t^2
  k_pow,            // k^t
  t_k_pow,          // t k^t
  t_half_pow,       // t 2^-t
  t_half_pow_next,  // t 2^-(t+1)
  base,             // (3/2) sum t q_t 2^-t
  passing,          // sum q_t k^t (1 + kt - t)
  gamma_b,          // the b-ball lower-bound constant
};

std::string weight_name(Weight w);
Weight parse_weight(const std::string& s);

struct GammaSpec {
  Weight weight = Weight::one;
  int terms = 12;   // truncation T (gamma_b: upper limit on terms)
  int digits = 50;  // gamma_b stops once a term is below 10^-(digits+5)
  int k = 2;
  int b = 3;
};

struct GammaResult {
  Rational partial;             // exact partial sum
  double tail_estimate = 0;     // heuristic, from the ratio of the last two terms
  int terms_used = 0;
  std::vector<Rational> trace;  // partial sums after each term
};

GammaResult gamma(const GammaSpec& spec);
// Term t of the series for spec (before summing).
Rational gamma_term(const GammaSpec& spec, int t);

struct CtBoundRow {
  int t = 0;
  int n = 0;
  BigInt c;
  Rational upper;     // q_t 2^n
  Interval lower;     // enclosure of q_t 2^n - r_t sqrt3^n
  bool upper_holds = false;
  bool lower_certified = false;  // lower.hi <= c
  bool lower_violated = false;   // lower.lo > c
};

struct CtBoundReport {
  std::vector<CtBoundRow> rows;
  int violations = 0;    // failed upper bounds plus certified lower violations
  int uncertified = 0;   // lower bounds the enclosure could not decide
};

CtBoundReport verify_ct_bounds(int t_max, int n_max, int digits = 50);

struct LimitRow {
  int n = 0;
  Rational f_ratio;     // F_w(n) / 2^n
  Rational s_ratio;     // S_w(n) / 2^n
  Rational conv_ratio;  // (F_w * F_w)(n) / (n 2^n)
};

struct LimitTrace {
  Weight weight = Weight::one;
  Rational gamma;  // partial sum used as the target
  std::vector<LimitRow> rows;
};

// weight is Weight::one or Weight::t
LimitTrace empirical_limits(Weight weight, int n_max, int terms = 20);

}  // namespace pjl

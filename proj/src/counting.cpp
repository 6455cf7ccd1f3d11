#include "pjl/counting.hpp"

#include "pjl/oracle.hpp"
#include "pjl/partitions.hpp"

#include <fmt/format.h>

#include "json.hpp"

#include <algorithm>

namespace pjl {

BigInt count_normal_prime_2(int n) {
  BigInt s = 0;
  for (int t = 1; t <= max_parts(n); ++t) s += c(t, n);
  return s;
}

namespace {

// sum over t of t * c_t(m), m = 1..n-1
BigInt weighted_prefix(int n) {
  BigInt s = 0;
  for (int m = 1; m < n; ++m)
    for (int t = 1; t <= max_parts(m); ++t) s += t * c(t, m);
  return s;
}

}  // namespace

BigInt count_strict_multiplex_2(int n) {
  if (n < 1) throw std::invalid_argument("period must be >= 1");
  return weighted_prefix(n) + 1;
}

BigInt count_multiplex_prime_2(int n) { return count_normal_prime_2(n) + count_strict_multiplex_2(n); }

BigInt count_colored_prime_2(int n) {
  if (n < 2) return 0;
  BigInt s = 0;
  const int half = n / 2;
  const int last = n % 2 ? half : half - 1;
  for (int m = 1; m <= last; ++m)
    for (int t = 1; t <= max_parts(m); ++t) s += t * c(t, m) * c(t, n - m);
  if (n % 2 == 0) {
    for (int t = 1; t <= max_parts(half); ++t) {
      BigInt ct = c(t, half);
      s += t * (ct * (ct - 1) / 2) + ((t + 1) / 2) * ct;
    }
  }
  return s;
}

BigInt count_passing_prime_1(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("passing count needs n >= 1 and k >= 1");
  BigInt s = 0;
  for (int h = 1; h <= std::min(n, k); ++h) s += binomial(k, h) * binomial(n - 1, h - 1) * factorial(h - 1);
  return s;
}

BigInt count_base_state_2(int n) {
  BigInt s = 0;
  for (int t = 1; t <= max_parts(std::max(n, 0)); ++t) s += t * c(t, n - t) + t * c(t, n - t - 1);
  return s;
}

int phi(const Cycle& cycle) {
  int count = 0;
  for (const Card& card : cards_of_cycle(cycle)) {
    bool throw_card = (card.kind == Card::Kind::C && (card.index == 1 || card.index == 2)) ||
                      card.kind == Card::Kind::Da || card.kind == Card::Kind::Db;
    count += throw_card;
  }
  return count;
}

namespace {

bool has_double(const Cycle& c) {
  for (const State& s : c)
    for (int e : s.cells)
      if (e >= 2) return true;
  return false;
}

}  // namespace

PassingBound lower_bound_passing_2_exact(int n, int k, int jobs) {
  if (n < 1 || k < 1) throw std::invalid_argument("passing bound needs n >= 1 and k >= 1");
  OracleQuery q;
  q.balls = 2;
  q.period = n;
  q.list = true;
  q.jobs = jobs;
  q.variant = Variant::normal;
  PassingBound out;
  for (const Cycle& cyc : enumerate_prime_cycles(q).cycles) out.normal_part += pow_int(k, phi(cyc));
  q.variant = Variant::multiplex;
  q.k = 2;
  for (const Cycle& cyc : enumerate_prime_cycles(q).cycles)
    if (has_double(cyc)) out.strict_part += pow_int(k, phi(cyc)) * (k - 1);
  return out;
}

BigInt lower_bound_passing_2_closed(int n, int k) {
  BigInt s = 0;
  for (int m = 1; m < n; ++m)
    for (int t = 1; t <= max_parts(m); ++t) s += (t * c(t, m) + 1) * pow_int(k, t) * (k - 1);
  for (int t = 1; t <= max_parts(n); ++t) s += c(t, n) * pow_int(k, t);
  return s;
}

BigInt lower_bound_passing_2_conservative(int n, int k) {
  BigInt inner = 1;
  for (int m = 1; m < n; ++m)
    for (int t = 1; t <= max_parts(m); ++t) inner += t * pow_int(k, t) * c(t, m);
  BigInt s = inner * (k - 1);
  for (int t = 1; t <= max_parts(n); ++t) s += c(t, n) * pow_int(k, t);
  return s;
}

Rational lower_bound_normal_b(int b, int n) {
  if (b < 2 || n < 1) throw std::invalid_argument("lower_bound_normal_b needs b >= 2 and n >= 1");
  Rational total = 0;
  const BigInt lead = pow_int(b - 1, n);
  for (int t = 1; t <= max_parts(n); ++t) {
    for (const auto& p : distinct_partitions(n, t)) {
      BigInt num = lead, den = binomial(t + b - 1, b);
      for (int i = 1; i <= t; ++i) {
        num *= pow_int(i + b - 1, p[i - 1]);
        den *= pow_int(i + b - 2, p[i - 1]);
      }
      total += Rational(num, den);
    }
  }
  return total / b;
}

ColoredSandwich colored_sandwich(int n) {
  BigInt full = 0, upper = 0;
  for (int m = 1; m < n; ++m)
    for (int t = 1; t <= max_parts(std::min(m, n - m)); ++t) {
      BigInt term = t * c(t, m) * c(t, n - m);
      full += term;
      if (m <= n / 2) upper += term;
    }
  return {Rational(full) / 2, upper};
}

std::vector<std::pair<int, Rational>> passing_growth_ratios(int k, int n_max, int jobs) {
  std::vector<std::pair<int, Rational>> out;
  for (int n = 1; n <= n_max; ++n) {
    OracleQuery q;
    q.variant = Variant::passing;
    q.balls = 2;
    q.period = n;
    q.k = k;
    q.jobs = jobs;
    auto r = enumerate_prime_cycles(q);
    out.emplace_back(n, Rational(BigInt(r.count), pow_int(1 + k, n)));
  }
  return out;
}

std::string CountReport::to_json() const {
  nlohmann::ordered_json j;
  j["variant"] = variant;
  j["params"] = params;
  j["formula"] = formula;
  if (oracle)
    j["oracle"] = *oracle;
  else
    j["oracle"] = nullptr;
  j["agree"] = agree;
  if (bound) j["bound"] = true;
  return j.dump();
}

namespace {

std::uint64_t oracle_count(Variant v, int b, int n, int k, int jobs, bool quotient = false) {
  OracleQuery q;
  q.variant = v;
  q.balls = b;
  q.period = n;
  q.k = k;
  q.jobs = jobs;
  q.quotient_colors = quotient;
  return enumerate_prime_cycles(q).count;
}

}  // namespace

CountReport verify_count(const std::string& variant, int n, int b, int k, int jobs) {
  CountReport r;
  r.variant = variant;
  r.params["n"] = n;
  BigInt formula;
  std::uint64_t oracle = 0;
  if (variant == "normal") {
    r.params["b"] = 2;
    formula = count_normal_prime_2(n);
    oracle = oracle_count(Variant::normal, 2, n, 1, jobs);
  } else if (variant == "multiplex") {
    r.params["b"] = 2;
    r.params["k"] = 2;
    formula = count_multiplex_prime_2(n);
    oracle = oracle_count(Variant::multiplex, 2, n, 2, jobs);
  } else if (variant == "strict") {
    r.params["b"] = 2;
    r.params["k"] = 2;
    formula = count_strict_multiplex_2(n);
    OracleQuery q;
    q.variant = Variant::multiplex;
    q.balls = 2;
    q.period = n;
    q.k = 2;
    q.list = true;
    q.jobs = jobs;
    auto res = enumerate_prime_cycles(q);
    oracle = std::count_if(res.cycles.begin(), res.cycles.end(), has_double);
  } else if (variant == "colored") {
    r.params["b"] = 2;
    r.params["k"] = 2;
    r.params["quotient"] = 1;
    formula = count_colored_prime_2(n);
    oracle = oracle_count(Variant::colored, 2, n, 2, jobs, true);
  } else if (variant == "passing1") {
    r.params["b"] = 1;
    r.params["k"] = k;
    formula = count_passing_prime_1(n, k);
    oracle = oracle_count(Variant::passing, 1, n, k, jobs);
  } else if (variant == "base") {
    r.params["b"] = 2;
    formula = count_base_state_2(n);
    oracle = enumerate_prime_cycles_through(normal_state({1, 1}), n, {}, false, jobs).count;
  } else if (variant == "bound-b") {
    r.params["b"] = b;
    r.bound = true;
    Rational bound = lower_bound_normal_b(b, n);
    oracle = oracle_count(Variant::normal, b, n, 1, jobs);
    r.formula = to_string(bound);
    r.oracle = std::to_string(oracle);
    r.agree = bound <= Rational(BigInt(oracle));
    return r;
  } else if (variant == "bound-passing-exact" || variant == "bound-passing-closed") {
    r.params["b"] = 2;
    r.params["k"] = k;
    r.bound = true;
    formula = variant == "bound-passing-exact" ? lower_bound_passing_2_exact(n, k, jobs).total()
                                               : lower_bound_passing_2_closed(n, k);
    oracle = oracle_count(Variant::passing, 2, n, k, jobs);
    r.formula = to_string(formula);
    r.oracle = std::to_string(oracle);
    r.agree = formula <= BigInt(oracle);
    return r;
  } else {
    throw std::invalid_argument(fmt::format("unknown verification '{}'", variant));
  }
  r.formula = to_string(formula);
  r.oracle = std::to_string(oracle);
  r.agree = formula == BigInt(oracle);
  return r;
}

}  // namespace pjl

#pragma once

#include "pjl/core_states.hpp"
#include "pjl/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pjl {

BigInt count_normal_prime_2(int n);
// Strict 2-ball multiplex patterns: those using a doubled beat.
BigInt count_strict_multiplex_2(int n);
BigInt count_multiplex_prime_2(int n);
// Colored 2-ball patterns, color classes up to swap; 0 for n < 2.
BigInt count_colored_prime_2(int n);
BigInt count_passing_prime_1(int n, int k);
// Patterns through <1,1>; valid for n >= 2 (gives 0 at n = 1).
BigInt count_base_state_2(int n);

// Throw cards C1, C2, Da, Db over one period.
int phi(const Cycle& cycle);

struct PassingBound {
  BigInt normal_part;  // sum over normal patterns of k^phi
  BigInt strict_part;  // sum over strict multiplex patterns of k^phi (k-1)
  BigInt total() const { return normal_part + strict_part; }
};

// Exact bound from oracle-enumerated 2-ball normal and strict multiplex sets.
PassingBound lower_bound_passing_2_exact(int n, int k, int jobs = 1);
// Closed form with +1 inside the (m, t) sum, t limited to t(t+1)/2 <= m.
BigInt lower_bound_passing_2_closed(int n, int k);
// Same with the +1 (the single D_c pattern per m) counted once.
BigInt lower_bound_passing_2_conservative(int n, int k);

Rational lower_bound_normal_b(int b, int n);

// Even-n sandwich terms around count_colored_prime_2.
struct ColoredSandwich {
  Rational lower;
  BigInt upper;
};
ColoredSandwich colored_sandwich(int n);

// Ratio table for the passing growth experiment: P'(2,n,k) / (1+k)^n.
// Never asserted.
std::vector<std::pair<int, Rational>> passing_growth_ratios(int k, int n_max, int jobs = 1);

struct CountReport {
  std::string variant;
  std::map<std::string, long long> params;
  std::string formula;              // exact integer or rational
  std::optional<std::string> oracle;
  bool agree = false;
  bool bound = false;               // agreement means formula <= oracle
  std::string to_json() const;
};

// Formula vs oracle for one closed form. variant is one of
// normal, multiplex, strict, colored, passing1, base, bound-b,
// bound-passing-exact, bound-passing-closed.
CountReport verify_count(const std::string& variant, int n, int b = 2, int k = 2, int jobs = 1);

}  // namespace pjl

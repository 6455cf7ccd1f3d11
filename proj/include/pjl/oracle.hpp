#pragma once

#include "pjl/core_states.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pjl {

struct OracleQuery {
  Variant variant = Variant::normal;
  int balls = 2;
  int period = 1;
  // multiplex capacity, number of colors, or number of hands
  int k = 1;
  // nullopt: sweep from n + b until two consecutive caps agree
  std::optional<int> cap;
  bool list = false;
  // colored only: count color classes up to relabeling
  bool quotient_colors = false;
  int jobs = 1;
  // DFS node budget per cap, 0 for none
  std::uint64_t budget = 0;
};

struct OracleResult {
  std::uint64_t count = 0;
  std::vector<Cycle> cycles;  // canonical, sorted; filled when listing
  int cap = 0;                // cap the count was taken at
  bool cap_stable = false;    // count agreed at cap and cap + 1, or cap is the proven bound
  std::vector<std::pair<int, std::uint64_t>> sweep;
  double seconds = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int cap, std::uint64_t partial, const std::string& what)
      : std::runtime_error(what), cap_(cap), partial_(partial) {}
  int cap() const { return cap_; }
  std::uint64_t partial() const { return partial_; }

 private:
  int cap_;
  std::uint64_t partial_;
};

void validate_query(const OracleQuery& q);

// Length no state of a period-n cycle can exceed: throw heights over one
// period sum to b*n.
int proven_cap(int balls, int period);

// All states with the query's ball count and variant parameters and length
// <= cap, sorted.
std::vector<State> all_states(const OracleQuery& q, int cap);

// Colors handed out round robin: ball i gets color (i mod k) + 1.
std::vector<int> default_colors(int balls, int colors);

OracleResult enumerate_prime_cycles(const OracleQuery& q);

// Prime cycles of period n through `state`. Cap semantics as in the query.
OracleResult enumerate_prime_cycles_through(const State& state, int n, std::optional<int> cap = {},
                                            bool list = false, int jobs = 1);

// Least rotation under lexicographic state-sequence order. Throws
// std::invalid_argument if the sequence is not a closed walk.
Cycle canonicalize_cycle(const Cycle& states);

// Least canonical rotation over all relabelings of the colors.
Cycle canonicalize_colors(const Cycle& states);

bool is_prime(const Cycle& c);
bool is_closed_walk(const Cycle& c);
int compare_cycles(const Cycle& a, const Cycle& b);

// variant;b;n;s1|s2|...;cards  (passing rows separated by '/')
std::string listing_record(Variant v, int balls, const Cycle& c);

using ProgressFn = std::function<void(const std::string&)>;
void set_oracle_progress(ProgressFn fn);

}  // namespace pjl

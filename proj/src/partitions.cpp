#include "pjl/partitions.hpp"

#include "pjl/oracle.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace pjl {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::vector<Partition> distinct_partitions(int n, int t) {
  std::vector<Partition> out;
  if (t < 1 || n < t * (t + 1) / 2) return out;
  Partition cur;
  // parts chosen largest first; `hi` bounds the next part
  std::function<void(int, int, int)> rec = [&](int left, int slots, int hi) {
    if (slots == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    int min_rest = (slots - 1) * slots / 2;  // smallest sum of the remaining parts
    for (int p = std::min(hi, left - min_rest); p >= slots; --p) {
      // the remaining slots - 1 parts are < p, so at most their top-sum
      int max_rest = (slots - 1) * (2 * p - slots) / 2;
      if (left - p > max_rest) break;
      cur.push_back(p);
      rec(left - p, slots - 1, p - 1);
      cur.pop_back();
    }
  };
  rec(n, t, n);
  return out;
}

int max_parts(int n) {
  int t = 0;
  while ((t + 1) * (t + 2) / 2 <= n) ++t;
  return t;
}

Rational c_rational(int t, int n) {
  Rational sum = 0;
  if (t < 1 || n <= 0) return sum;
  for (const Partition& p : distinct_partitions(n, t)) {
    BigInt num = 1, den = static_cast<unsigned>(t * (t + 1));
    for (int i = 1; i <= t; ++i) {
      num *= pow_int(i + 1, p[i - 1]);
      den *= pow_int(i, p[i - 1]);
    }
    sum += Rational(num, den);
  }
  return sum;
}

namespace {

std::mutex g_c_mu;
std::map<std::pair<int, int>, BigInt> g_c_memo;

}  // namespace

BigInt c(int t, int n) {
  if (t < 1 || n <= 0 || n < t * (t + 1) / 2) return 0;
  {
    std::lock_guard<std::mutex> lock(g_c_mu);
    auto it = g_c_memo.find({t, n});
    if (it != g_c_memo.end()) return it->second;
  }
  Rational r = c_rational(t, n);
  if (denominator(r) != 1)
    throw std::logic_error(fmt::format("c({}, {}) = {} is not an integer", t, n, to_string(r)));
  BigInt v = numerator(r);
  std::lock_guard<std::mutex> lock(g_c_mu);
  g_c_memo[{t, n}] = v;
  return v;
}

void seed_c(int t, int n, const BigInt& value) {
  std::lock_guard<std::mutex> lock(g_c_mu);
  g_c_memo[{t, n}] = value;
}

std::vector<std::tuple<int, int, BigInt>> memoized_c() {
  std::lock_guard<std::mutex> lock(g_c_mu);
  std::vector<std::tuple<int, int, BigInt>> out;
  for (const auto& [key, v] : g_c_memo) out.emplace_back(key.first, key.second, v);
  return out;
}

void validate_collection(const SpacingCollection& x) {
  if (x.empty()) throw std::invalid_argument("spacing collection has no sets");
  std::vector<int> all;
  for (const SpacingSet& s : x) {
    if (s.empty()) throw std::invalid_argument("spacing collection contains an empty set");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("spacing set must be strictly ascending");
    if (s.front() < 1) throw std::invalid_argument("spacings must be positive");
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument(fmt::format("spacing sets overlap in {}", format_collection(x)));
}

SpacingCollection canonical_rotation(const SpacingCollection& x) {
  SpacingCollection best = x;
  for (size_t r = 1; r < x.size(); ++r) {
    SpacingCollection y(x.begin() + r, x.end());
    y.insert(y.end(), x.begin(), x.begin() + r);
    if (y < best) best = std::move(y);
  }
  return best;
}

int collection_period(const SpacingCollection& x) {
  int n = 0;
  for (const SpacingSet& s : x) n += s.back();
  return n;
}

std::vector<SpacingCollection> enumerate_spacing_collections(int t, int n) {
  std::vector<SpacingCollection> out;
  for (const Partition& p : distinct_partitions(n, t)) {
    // largest max first fixes the rotation; remaining maxes in every order
    std::vector<int> rest(p.begin() + 1, p.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> maxes{p[0]};
      maxes.insert(maxes.end(), rest.begin(), rest.end());
      std::vector<char> used(p[0] + 1, 0);
      for (int m : maxes) used[m] = 1;
      SpacingCollection cur(t);
      std::function<void(int)> fill_set = [&](int i) {
        if (i == t) {
          out.push_back(canonical_rotation(cur));
          return;
        }
        std::vector<int> avail;
        for (int v = 1; v < maxes[i]; ++v)
          if (!used[v]) avail.push_back(v);
        const size_t m = avail.size();
        for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
          SpacingSet s;
          for (size_t b = 0; b < m; ++b)
            if (mask >> b & 1) s.push_back(avail[b]);
          for (int v : s) used[v] = 1;
          s.push_back(maxes[i]);
          cur[i] = s;
          fill_set(i + 1);
          for (size_t b = 0; b + 1 < s.size(); ++b) used[s[b]] = 0;
        }
      };
      fill_set(0);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// normal 2-ball state with balls landing in a and b beats
State two_ball(int a, int b) {
  std::vector<int> bits(std::max(a, b), 0);
  bits[a - 1] = 1;
  bits[b - 1] = 1;
  return normal_state(std::move(bits));
}

}  // namespace

Cycle pattern_of_spacing_collection(const SpacingCollection& x) {
  validate_collection(x);
  Cycle states;
  const size_t t = x.size();
  for (size_t i = 0; i < t; ++i) {
    const SpacingSet& s = x[i];
    const int next_max = x[(i + 1) % t].back();
    // spacings visited largest to smallest
    for (size_t j = s.size(); j-- > 0;) {
      const int sp = s[j];
      const int height = j > 0 ? sp - s[j - 1] : sp + next_max;
      // landing state, then the beats until the next landing
      states.push_back(two_ball(1, sp + 1));
      int a = height, b = sp;
      while (std::min(a, b) > 1) {
        states.push_back(two_ball(a, b));
        --a;
        --b;
      }
    }
  }
  return canonicalize_cycle(states);
}

SpacingCollection spacings_of_pattern(const Cycle& cycle) {
  if (cycle.empty() || cycle.front().variant != Variant::normal || cycle.front().balls() != 2)
    throw std::invalid_argument("spacings_of_pattern: expects a 2-ball normal cycle");
  if (!is_closed_walk(cycle)) throw std::invalid_argument("spacings_of_pattern: not a closed walk");
  if (!is_prime(cycle)) throw std::invalid_argument("spacings_of_pattern: cycle is not prime");
  const std::vector<Card> cards = cards_of_cycle(cycle);
  const size_t n = cycle.size();
  size_t start = n;
  for (size_t i = 0; i < n; ++i)
    if (cards[i] == Card::c(2)) {
      start = (i + 1) % n;
      break;
    }
  if (start == n) throw std::invalid_argument("spacings_of_pattern: no C2 card");
  SpacingCollection out;
  SpacingSet cur;
  for (size_t r = 0; r < n; ++r) {
    size_t i = (start + r) % n;
    const State& s = cycle[i];
    if (s.at(0) != 1) continue;
    cur.push_back(s.length() - 1);
    if (cards[i] == Card::c(2)) {
      std::sort(cur.begin(), cur.end());
      out.push_back(cur);
      cur.clear();
    }
  }
  validate_collection(out);
  return canonical_rotation(out);
}

std::string format_collection(const SpacingCollection& x) {
  std::string out = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (size_t j = 0; j < x[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(x[i][j]);
    }
    out += "}";
  }
  return out + ")";
}

}  // namespace pjl

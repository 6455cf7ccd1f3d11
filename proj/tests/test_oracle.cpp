#include "doctest.h"

#include "support/brute_force.hpp"

#include "pjl/oracle.hpp"

#include <random>
#include <set>

using namespace pjl;

namespace {

OracleQuery query(Variant v, int b, int n, int k) {
  OracleQuery q;
  q.variant = v;
  q.balls = b;
  q.period = n;
  q.k = k;
  return q;
}

std::uint64_t brute(Variant v, int b, int n, int k) {
  bf::Space sp{static_cast<bf::Kind>(static_cast<int>(v)), b, k};
  if (v == Variant::colored) sp.colors = default_colors(b, k);
  return bf::prime_cycles(sp, n, proven_cap(b, n)).size();
}

}  // namespace

TEST_CASE("worked counts") {
  CHECK(enumerate_prime_cycles(query(Variant::normal, 2, 2, 1)).count == 2);
  CHECK(enumerate_prime_cycles(query(Variant::multiplex, 2, 3, 2)).count == 9);
  auto q = query(Variant::colored, 2, 3, 2);
  q.quotient_colors = true;
  CHECK(enumerate_prime_cycles(q).count == 2);
}

TEST_CASE("oracle matches the brute-force cycle search") {
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_prime_cycles(query(Variant::normal, 2, n, 1)).count == brute(Variant::normal, 2, n, 1));
  for (int n = 1; n <= 4; ++n) CHECK(enumerate_prime_cycles(query(Variant::normal, 3, n, 1)).count == brute(Variant::normal, 3, n, 1));
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate_prime_cycles(query(Variant::multiplex, 2, n, 2)).count == brute(Variant::multiplex, 2, n, 2));
  for (int n = 1; n <= 4; ++n)
    CHECK(enumerate_prime_cycles(query(Variant::colored, 2, n, 2)).count == brute(Variant::colored, 2, n, 2));
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      CHECK(enumerate_prime_cycles(query(Variant::passing, 1, n, k)).count == brute(Variant::passing, 1, n, k));
  for (int n = 1; n <= 3; ++n)
    CHECK(enumerate_prime_cycles(query(Variant::passing, 2, n, 2)).count == brute(Variant::passing, 2, n, 2));
}

TEST_CASE("color quotient matches Burnside") {
  bf::Space sp{bf::Kind::colored, 2, 2, {1, 2}};
  for (int n = 1; n <= 4; ++n) {
    auto q = query(Variant::colored, 2, n, 2);
    q.quotient_colors = true;
    CHECK(enumerate_prime_cycles(q).count == bf::colored_orbits_2(bf::prime_cycles(sp, n, 2 * n)));
  }
}

TEST_CASE("listed cycles are canonical, prime and distinct") {
  auto q = query(Variant::multiplex, 2, 4, 2);
  q.list = true;
  q.jobs = 2;
  auto r = enumerate_prime_cycles(q);
  CHECK(r.cycles.size() == r.count);
  std::set<std::string> seen;
  for (const Cycle& c : r.cycles) {
    CHECK(c.size() == 4u);
    CHECK(is_prime(c));
    CHECK(is_closed_walk(c));
    CHECK(canonicalize_cycle(c) == c);
    std::string key;
    for (const auto& s : c) key += format_state(s) + "|";
    CHECK(seen.insert(key).second);
  }
  for (size_t i = 1; i < r.cycles.size(); ++i) CHECK(compare_cycles(r.cycles[i - 1], r.cycles[i]) < 0);
}

TEST_CASE("canonical rotation") {
  State a = normal_state({1, 0, 1}), b = normal_state({1, 1});
  CHECK(canonicalize_cycle({a, b}) == Cycle{b, a});
  CHECK(canonicalize_cycle({b}) == Cycle{b});
  CHECK_THROWS_AS(canonicalize_cycle({a, a}), std::invalid_argument);
  // rotation invariance on every listed cycle
  auto q = query(Variant::normal, 3, 4, 1);
  q.list = true;
  for (const Cycle& c : enumerate_prime_cycles(q).cycles)
    for (size_t r = 0; r < c.size(); ++r) {
      Cycle rot(c.begin() + r, c.end());
      rot.insert(rot.end(), c.begin(), c.begin() + r);
      CHECK(canonicalize_cycle(rot) == c);
    }
}

TEST_CASE("cycles through a state") {
  CHECK(enumerate_prime_cycles_through(normal_state({1, 1}), 1).count == 1);
  CHECK(enumerate_prime_cycles_through(normal_state({1, 1}), 3).count == 3);
  CHECK(enumerate_prime_cycles_through(multiplex_state({2}, 2), 1).count == 1);
  bf::Space sp{bf::Kind::normal, 2, 1};
  for (int n = 2; n <= 6; ++n)
    CHECK(enumerate_prime_cycles_through(normal_state({1, 1}), n).count ==
          bf::prime_cycles(sp, n, 2 * n, bf::St{{1, 1}}).size());
}

TEST_CASE("cap sweep and budget") {
  auto q = query(Variant::normal, 2, 5, 1);
  auto r = enumerate_prime_cycles(q);
  CHECK(r.cap_stable);
  CHECK(r.cap <= proven_cap(2, 5));
  q.cap = 10;
  CHECK(enumerate_prime_cycles(q).count == r.count);
  q.cap = 3;
  CHECK(enumerate_prime_cycles(q).count < r.count);
  q.cap = 10;
  q.budget = 5;
  CHECK_THROWS_AS(enumerate_prime_cycles(q), BudgetExceeded);
}

TEST_CASE("jobs do not change results") {
  for (int jobs : {1, 3}) {
    auto q = query(Variant::normal, 2, 7, 1);
    q.jobs = jobs;
    CHECK(enumerate_prime_cycles(q).count == 105);
  }
}

TEST_CASE("query validation") {
  CHECK_THROWS(validate_query(query(Variant::multiplex, 2, 3, 3)));
  CHECK_THROWS(validate_query(query(Variant::normal, 2, 0, 1)));
  CHECK(default_colors(5, 2) == std::vector<int>{1, 1, 1, 2, 2});
}

TEST_CASE("listing records") {
  Cycle c{normal_state({1, 1}), normal_state({1, 0, 1}), normal_state({0, 1, 1})};
  CHECK(listing_record(Variant::normal, 2, c) == "normal;2;3;11|101|011;C2 C2 C0");
}

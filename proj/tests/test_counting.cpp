#include "doctest.h"

#include "support/brute_force.hpp"

#include "pjl/counting.hpp"
#include "pjl/oracle.hpp"

#include "json.hpp"

using namespace pjl;

namespace {

std::uint64_t brute(bf::Kind kind, int b, int n, int k, std::vector<int> colors = {}) {
  bf::Space sp{kind, b, k, std::move(colors)};
  return bf::prime_cycles(sp, n, b * n).size();
}

}  // namespace

TEST_CASE("normal 2-ball") {
  CHECK(count_normal_prime_2(1) == 1);
  CHECK(count_normal_prime_2(3) == 5);
  CHECK(count_normal_prime_2(5) == 23);
  for (int n = 1; n <= 7; ++n) CHECK(count_normal_prime_2(n) == brute(bf::Kind::normal, 2, n, 1));
}

TEST_CASE("multiplex 2-ball") {
  CHECK(count_strict_multiplex_2(1) == 1);
  CHECK(count_strict_multiplex_2(3) == 4);
  CHECK(count_strict_multiplex_2(5) == 22);
  CHECK(count_multiplex_prime_2(1) == 2);
  CHECK(count_multiplex_prime_2(5) == 45);
  CHECK(count_multiplex_prime_2(17) == 401061);
  CHECK(count_multiplex_prime_2(30) == BigInt("4007533072"));
  for (int n = 1; n <= 30; ++n)
    CHECK(count_multiplex_prime_2(n) == count_normal_prime_2(n) + count_strict_multiplex_2(n));
  for (int n = 1; n <= 5; ++n) CHECK(count_multiplex_prime_2(n) == brute(bf::Kind::multiplex, 2, n, 2));
}

TEST_CASE("colored 2-ball, colors up to swap") {
  CHECK(count_colored_prime_2(3) == 2);
  CHECK(count_colored_prime_2(4) == 7);
  CHECK(count_colored_prime_2(5) == 16);
  CHECK(count_colored_prime_2(1) == 0);
  bf::Space sp{bf::Kind::colored, 2, 2, {1, 2}};
  for (int n = 2; n <= 5; ++n) CHECK(count_colored_prime_2(n) == bf::colored_orbits_2(bf::prime_cycles(sp, n, 2 * n)));
  // the labeled count differs once n >= 3
  CHECK(count_colored_prime_2(4) != brute(bf::Kind::colored, 2, 4, 2, {1, 2}));
}

TEST_CASE("colored sandwich") {
  for (int n = 2; n <= 12; n += 2) {
    auto s = colored_sandwich(n);
    CHECK(s.lower <= Rational(count_colored_prime_2(n)));
    CHECK(count_colored_prime_2(n) <= s.upper);
  }
}

TEST_CASE("passing, one ball") {
  for (int n = 1; n <= 10; ++n) CHECK(count_passing_prime_1(n, 1) == 1);
  for (int k = 1; k <= 5; ++k) CHECK(count_passing_prime_1(1, k) == k);
  CHECK(count_passing_prime_1(3, 2) == 4);
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 5; ++n) CHECK(count_passing_prime_1(n, k) == brute(bf::Kind::passing, 1, n, k));
}

TEST_CASE("patterns through the base state") {
  CHECK(count_base_state_2(2) == 1);
  CHECK(count_base_state_2(3) == 3);
  CHECK(count_base_state_2(1) == 0);
  bf::Space sp{bf::Kind::normal, 2, 1};
  for (int n = 2; n <= 7; ++n) CHECK(count_base_state_2(n) == bf::prime_cycles(sp, n, 2 * n, bf::St{{1, 1}}).size());
}

TEST_CASE("phi") {
  Cycle c{normal_state({0, 1, 1}), normal_state({1, 1}), normal_state({1, 0, 0, 1})};
  CHECK(format_cards(cards_of_cycle(c)) == "C0 C2 C1");
  CHECK(phi(c) == 2);
  CHECK(phi({normal_state({1, 1})}) == 1);
  CHECK(phi({multiplex_state({2}, 2)}) == 0);
}

TEST_CASE("b-ball lower bound") {
  CHECK(lower_bound_normal_b(3, 3) == 11);
  for (int n = 1; n <= 12; ++n) CHECK(lower_bound_normal_b(2, n) == Rational(count_normal_prime_2(n)));
  for (int n = 1; n <= 4; ++n) CHECK(lower_bound_normal_b(3, n) <= Rational(BigInt(brute(bf::Kind::normal, 3, n, 1))));
}

TEST_CASE("passing 2-ball bounds") {
  CHECK(lower_bound_passing_2_exact(2, 1).total() == 2);
  for (int n = 1; n <= 8; ++n) CHECK(lower_bound_passing_2_closed(n, 1) == count_normal_prime_2(n));
  for (int n = 1; n <= 3; ++n) {
    BigInt exact = lower_bound_passing_2_exact(n, 2).total();
    BigInt oracle = brute(bf::Kind::passing, 2, n, 2);
    CHECK(exact <= oracle);
    CHECK(lower_bound_passing_2_closed(n, 2) <= exact);
    CHECK(lower_bound_passing_2_conservative(n, 2) <= exact);
  }
  CHECK(lower_bound_passing_2_closed(3, 2) <= lower_bound_passing_2_exact(3, 2).total());
}

TEST_CASE("growth ratios are finite and positive") {
  auto rows = passing_growth_ratios(2, 3);
  CHECK(rows.size() == 3u);
  for (const auto& [n, r] : rows) CHECK(r > 0);
}

TEST_CASE("verification reports") {
  auto r = verify_count("colored", 3);
  CHECK(r.formula == "2");
  CHECK(r.oracle == "2");
  CHECK(r.agree);
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["agree"] == true);
  CHECK(j["params"]["n"] == 3);
  auto bnd = verify_count("bound-b", 3, 3);
  CHECK(bnd.bound);
  CHECK(bnd.agree);
  CHECK(verify_count("passing1", 4, 2, 3).agree);
  CHECK(verify_count("strict", 4).agree);
  CHECK_THROWS_AS(verify_count("nonsense", 3), std::invalid_argument);
}

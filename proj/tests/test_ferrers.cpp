#include "doctest.h"

#include "support/brute_force.hpp"

#include "pjl/counting.hpp"
#include "pjl/ferrers.hpp"
#include "pjl/oracle.hpp"

using namespace pjl;

TEST_CASE("diagram examples") {
  auto one = enumerate_filled_diagrams({1}, 2);
  REQUIRE(one.size() == 1u);
  CHECK(one[0].rows == std::vector<std::vector<int>>{{2}});
  auto two = enumerate_filled_diagrams({2, 1}, 2);
  REQUIRE(two.size() == 1u);
  CHECK(two[0].rows == std::vector<std::vector<int>>{{0, 2}, {2}});
  CHECK(count_filled_diagrams({1}, 2) == 1);
  CHECK(count_filled_diagrams({2, 1}, 2) == 1);
  CHECK(enumerate_filled_diagrams({2, 1}, 3).size() == count_filled_diagrams({2, 1}, 3));
  CHECK(enumerate_filled_diagrams({3, 1}, 3).size() == bf::filled_diagrams({3, 1}, 3));
  for (const auto& d : enumerate_filled_diagrams({3, 2}, 4)) CHECK_NOTHROW(validate_diagram(d));
  CHECK_THROWS(validate_diagram({{2, 1}, 2, {{2, 2}, {2}}}));
  CHECK_THROWS(validate_diagram({{2, 1}, 3, {{2, 3}, {3}}}));
  CHECK_THROWS(enumerate_filled_diagrams({1, 2}, 3));
}

TEST_CASE("enumeration, column product and exhaustive fillings agree") {
  for (int b = 2; b <= 4; ++b)
    for (int n = 1; n <= 8; ++n)
      for (int t = 1; t <= max_parts(n); ++t)
        for (const auto& p : distinct_partitions(n, t)) {
          auto listed = enumerate_filled_diagrams(p, b).size();
          CHECK(BigInt(listed) == count_filled_diagrams(p, b));
          if (n <= 7) CHECK(listed == bf::filled_diagrams(p, b));
        }
}

TEST_CASE("displayed closed form differs from the enumeration") {
  CHECK(diagram_count_display({1}, 3) == 3);
  CHECK(count_filled_diagrams({1}, 3) == 1);
  CHECK(diagram_count_display({1}, 2) == 2);
}

TEST_CASE("landing words") {
  FilledDiagram d{{2, 1}, 2, {{0, 2}, {2}}};
  CHECK(landing_word(d, {0, 1}) == std::vector<int>{2, 0, 2});
  CHECK(landing_word(d, {1, 0}) == std::vector<int>{2, 2, 0});
  CHECK(landing_word({{1}, 2, {{2}}}, {0}) == std::vector<int>{2});
  CHECK_THROWS(landing_word(d, {0, 0}));
}

TEST_CASE("words to patterns") {
  CHECK(cards_of_landing_word({2}, 2) == std::vector<int>{2});
  Cycle loop = pattern_of_landing_word({2}, 2);
  REQUIRE(loop.size() == 1u);
  CHECK(format_state(loop[0]) == "11");
  CHECK(cards_of_landing_word({1}, 1) == std::vector<int>{1});
  CHECK_THROWS_AS(cards_of_landing_word({}, 2), MalformedWord);
  CHECK_THROWS_AS(cards_of_landing_word({4}, 3), MalformedWord);
  CHECK_THROWS_AS(states_of_cards({2, 2}, 1), std::invalid_argument);
}

TEST_CASE("generated family, b = 3") {
  for (int n = 1; n <= 6; ++n) {
    FamilyReport r = generate_family(3, n);
    CHECK(r.malformed == 0);
    CHECK(r.invalid == 0);
    CHECK(r.nonprime == 0);
    CHECK(r.landing_mismatch == 0);
    CHECK(Rational(BigInt(r.distinct)) >= r.bound);
    CHECK(r.display_word_count == 3 * r.bound);
    bf::Space sp{bf::Kind::normal, 3, 1};
    for (const Cycle& c : r.cycles) {
      CHECK(static_cast<int>(c.size()) == n);
      CHECK(is_prime(c));
      for (size_t i = 0; i < c.size(); ++i) {
        CHECK(c[i].balls() == 3);
        CHECK(bf::edge(sp, bf::St{c[i].cells}, bf::St{c[(i + 1) % c.size()].cells}));
      }
    }
  }
  FamilyReport r3 = generate_family(3, 3);
  CHECK(r3.word_count == 13);
  CHECK(r3.display_word_count == 33);
  CHECK(r3.distinct == 11);
}

TEST_CASE("b = 2 family reproduces every 2-ball pattern") {
  for (int n = 1; n <= 7; ++n) {
    FamilyReport r = generate_family(2, n);
    CHECK(r.nonprime + r.invalid + r.malformed == 0);
    CHECK(BigInt(r.distinct) == count_normal_prime_2(n));
  }
}

TEST_CASE("landing-beat bump start is reported, not assumed") {
  FamilyReport alt = generate_family(3, 4, BumpStart::landing_beat);
  MESSAGE("landing-beat start, b=3 n=4: malformed " << alt.malformed << ", invalid " << alt.invalid
                                                   << ", nonprime " << alt.nonprime << ", distinct " << alt.distinct);
  CHECK(alt.word_count == generate_family(3, 4).word_count);
}

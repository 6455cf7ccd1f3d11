#include "doctest.h"

#include "support/brute_force.hpp"

#include "pjl/infinite.hpp"

#include <random>

using namespace pjl;

namespace {

bool contains(const std::vector<AbbrevState>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("flip-reverse examples") {
  CHECK(fr("0011") == "0111");
  CHECK(fr("") == "");
  CHECK(fr("1") == "1");
  CHECK_THROWS(fr("010"));
  CHECK_THROWS(fr("0121"));
  CHECK(parse_abbrev("\xCE\xB5") == "");
  CHECK(format_abbrev("") == "\xCE\xB5");
}

TEST_CASE("flip-reverse matches the explicit expansion") {
  for (const auto& s : window_states(12)) CHECK(fr(s) == bf::flip_reverse(s));
  std::mt19937 rng(19);
  for (int i = 0; i < 300; ++i) {
    std::string s;
    int len = 1 + static_cast<int>(rng() % 40);
    for (int j = 0; j + 1 < len; ++j) s += (rng() & 1) ? '1' : '0';
    s += '1';
    CHECK(fr(fr(s)) == s);
    CHECK(fr(s).size() == s.size());
    CHECK(fr(s) == bf::flip_reverse(s));
  }
}

TEST_CASE("successor examples") {
  CHECK(contains(successors_inf("001001", 8), "01001"));
  CHECK(contains(successors_inf("001001", 8), "00100101"));
  auto s = successors_inf("11000101", 8);
  CHECK(contains(s, "00101"));
  CHECK(contains(s, "11100101"));
  CHECK(successors_inf("1", 3) == std::vector<AbbrevState>{"", "101", "11"});
  CHECK(is_transition_inf("001001", "01001"));
  CHECK_FALSE(is_transition_inf("11", "1"));
  CHECK_THROWS(successors_inf("0001", 3));
}

TEST_CASE("successors match the explicit ball-throwing rule") {
  for (int L = 1; L <= 9; ++L)
    for (const auto& s : window_states(L)) CHECK(successors_inf(s, L) == bf::inf_successors(s, L));
}

TEST_CASE("each transition flips one zero") {
  for (int L : {4, 8}) {
    auto chk = check_single_flip(L);
    CHECK(chk.violations == 0);
    CHECK(chk.checked > 0);
  }
  auto flips = zero_flips("0101", 6);
  CHECK(flips.front() == "101");
  CHECK(flips.size() == 5u);
}

TEST_CASE("realize") {
  CHECK(format_state(realize("1", 2)) == "101");
  CHECK(format_state(realize("001", 2)) == "10001");
  CHECK(format_state(realize("", 3)) == "111");
  CHECK_THROWS(realize("111", 2));
  for (const auto& s : window_states(7)) {
    int ones = static_cast<int>(std::count(s.begin(), s.end(), '1'));
    for (int b = ones; b <= ones + 2; ++b) CHECK(realize(s, b + 1) == lift(realize(s, b)));
  }
}

TEST_CASE("realized transitions are juggling transitions") {
  // a G-infinity edge between states that fit in b balls is a b-ball edge
  for (const auto& a : window_states(6))
    for (const auto& c : successors_inf(a, 6)) {
      int b = static_cast<int>(std::max(std::count(a.begin(), a.end(), '1'), std::count(c.begin(), c.end(), '1'))) + 1;
      CHECK(is_valid_transition(realize(a, b), realize(c, b)));
    }
}

TEST_CASE("structural checks") {
  CHECK(check_fr_involution(14).violations == 0);
  CHECK(check_transition_reversal(8).violations == 0);
}

TEST_CASE("walk counts against explicit enumeration") {
  for (int len = 0; len <= 4; ++len) {
    bf::WalkTally t = bf::tally_walks(len, 6);
    for (const auto& s : window_states(6)) {
      WalkCounts w = count_walks_through(s, len, 6);
      CHECK(w.walks == t.walks[s]);
      CHECK(w.visits == t.visits[s]);
    }
  }
  CHECK(count_walks_through("0011", 0, 8).walks == 1);
  CHECK(count_walks_through("1", 2, 6).walks == bf::tally_walks(2, 6).walks["1"]);
}

TEST_CASE("walk counts are flip-reverse symmetric") {
  for (int k = 0; k <= 5; ++k) CHECK(count_walks_through("0011", k, 8).walks == count_walks_through("0111", k, 8).walks);
  CHECK(check_walk_bijection(4, 4, 6).violations == 0);
  CHECK(check_walk_bijection(4, 4, 6, true).violations == 0);
}

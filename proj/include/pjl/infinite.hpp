#pragma once

#include "pjl/core_states.hpp"
#include "pjl/numeric.hpp"

#include <string>
#include <vector>

namespace pjl {

// Abbreviated G-infinity state: the bits between the padding 0 (after the
// infinite run of 1s) and the infinite run of 0s. Empty, or ends in '1'.
using AbbrevState = std::string;

void validate_abbrev(const AbbrevState& s);
// Accepts "ε" for the empty state.
AbbrevState parse_abbrev(const std::string& text);
std::string format_abbrev(const AbbrevState& s);

// Flip every bit of the expansion, reverse, abbreviate.
AbbrevState fr(const AbbrevState& s);

// Rule 1 (fill a non-padding 0, result length <= max_len) and rule 2 (fill
// the padding 0), sorted and deduplicated.
std::vector<AbbrevState> successors_inf(const AbbrevState& s, int max_len);
bool is_transition_inf(const AbbrevState& from, const AbbrevState& to);
// Results of filling each 0 of the expansion up to max_len (padding 0 first).
std::vector<AbbrevState> zero_flips(const AbbrevState& s, int max_len);

// (b - popcount) ones, the padding 0, then s; as a b-ball normal state.
State realize(const AbbrevState& s, int b);

// All states of length <= max_len.
std::vector<AbbrevState> window_states(int max_len);

struct WalkCounts {
  BigInt walks;         // walks containing the state at least once
  BigInt visits;        // sum over walks of the number of positions at the state
};

// Walks with `length` transitions in the max_len window.
WalkCounts count_walks_through(const AbbrevState& s, int length, int max_len);

struct InfiniteCheck {
  long long checked = 0;
  long long violations = 0;
};

InfiniteCheck check_fr_involution(int max_len);
InfiniteCheck check_transition_reversal(int max_len);
InfiniteCheck check_single_flip(int max_len);
// For each state of length <= state_len and k <= max_walk, compare walk
// counts at s and fr(s) in the window; multiplicity selects the convention.
InfiniteCheck check_walk_bijection(int state_len, int max_walk, int max_len, bool multiplicity = false);

}  // namespace pjl

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pjl {

enum class Variant { normal, multiplex, colored, passing };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);

// A juggling state in one of the four representations.
//
// normal, multiplex, colored: cells[i] is the entry for a landing in i+1
// beats (a 0/1 bit, a ball count up to k, or a color id in 1..k).
// passing: k hands, stored column-major; cells[j*k + h] is the bit for hand h
// landing in j+1 beats.
//
// Canonical form has trailing zero beats trimmed.
struct State {
  Variant variant = Variant::normal;
  int k = 1;
  std::vector<int> cells;

  int length() const;  // in beats
  int balls() const;
  // 0-based beat; past the end reads as 0
  int at(int beat, int hand = 0) const;
  bool empty() const { return cells.empty(); }

  friend bool operator==(const State& a, const State& b) {
    return a.variant == b.variant && a.k == b.k && a.cells == b.cells;
  }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }
};

// Total order used for successor lists and canonical rotations: sorted
// landing times compared lexicographically, i.e. at the first differing beat
// the state with the earlier ball is smaller.
int compare_states(const State& a, const State& b);
struct StateLess {
  bool operator()(const State& a, const State& b) const { return compare_states(a, b) < 0; }
};

State normal_state(std::vector<int> bits);
State multiplex_state(std::vector<int> entries, int k);
// sigma(i,j): single balls at positions i and j, or a 2 at position i when i == j.
State sigma(int i, int j);
State colored_state(std::vector<int> entries, int colors);
// rows[h][j] = bit for hand h landing in j+1 beats; rows may differ in length.
State passing_state(const std::vector<std::vector<int>>& rows);

void trim(State& s);
// Throws std::invalid_argument when the state breaks its variant's invariants.
void validate(const State& s);

// "101" or "⟨1,0,1⟩" for normal/multiplex; "1 0 2" for colored;
// "010;001" for passing; "ε" or "" for the empty state.
State parse_state(Variant v, std::string_view text, int k = 0);
std::string format_state(const State& s);
// ⟨1,0,1⟩ style, rows joined by ';' for passing.
std::string format_angle(const State& s);

// Sorted color ids of a colored state.
std::vector<int> color_multiset(const State& s);

class InvalidTransition : public std::invalid_argument {
 public:
  // condition 0: ball count or color mismatch; otherwise the 1-based beat
  // index i where entry i+1 of `from` exceeds entry i of `to` (or, for
  // colored, disagrees with it).
  InvalidTransition(int condition, const std::string& what)
      : std::invalid_argument(what), condition_(condition) {}
  int condition() const { return condition_; }

 private:
  int condition_;
};

std::optional<int> violated_condition(const State& from, const State& to);
bool is_valid_transition(const State& from, const State& to);
void require_transition(const State& from, const State& to);

// Legal successors of length <= cap, sorted by compare_states.
std::vector<State> successors(const State& s, int cap);

struct Card {
  enum class Kind { C, D0, Da, Db, Dc };
  Kind kind = Kind::C;
  int index = 0;  // C_index; unused for D cards

  static Card c(int i) { return {Kind::C, i}; }
  friend bool operator==(const Card& a, const Card& b) {
    return a.kind == b.kind && (a.kind != Kind::C || a.index == b.index);
  }
  friend bool operator!=(const Card& a, const Card& b) { return !(a == b); }
};

std::string format_card(const Card& c);
Card parse_card(std::string_view text);

// Card for a valid transition. Normal states use C_0..C_b. 2-ball multiplex
// transitions involving a doubled beat use D_0/D_a/D_b/D_c. Colored states use
// the card of their uncolored shape; passing states the card of their
// column sums. Throws InvalidTransition, or std::domain_error when no card
// vocabulary covers the transition (e.g. 3-ball multiplex doubles).
Card transition_card(const State& from, const State& to);

using Cycle = std::vector<State>;

std::vector<Card> cards_of_cycle(const Cycle& cycle);
std::string format_cards(const std::vector<Card>& cards);

// Closed walk from `first` whose transitions carry exactly `cards`.
// Throws std::invalid_argument if none exists or it is not unique.
Cycle cycle_from_cards(const State& first, const std::vector<Card>& cards);

// Prepend a ball landing on the next beat (normal states only).
State lift(const State& s);

// Uncolored shape of a colored state; column sums of a passing state.
State uncolored(const State& s);
State column_sums(const State& s);

}  // namespace pjl

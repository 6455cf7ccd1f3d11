#pragma once

#include "pjl/core_states.hpp"
#include "pjl/numeric.hpp"
#include "pjl/partitions.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pjl {

struct FilledDiagram {
  Partition partition;
  int b = 2;
  // rows[i][j]: row i (length partition[i]), column j from the left
  std::vector<std::vector<int>> rows;
};

void validate_diagram(const FilledDiagram& d);
std::vector<FilledDiagram> enumerate_filled_diagrams(const Partition& p, int b);
// Column by column: (b-1)^(h-1) where a row ends, (b-1)^(h-1) (b-1+h) elsewhere.
BigInt count_filled_diagrams(const Partition& p, int b);
// The closed form (b-1)^n / (C(t+b-1, b) t!) * prod ((i+b-1)/(i+b-2))^p_i.
Rational diagram_count_display(const Partition& p, int b);

// Rows read right to left, concatenated in `row_order`.
std::vector<int> landing_word(const FilledDiagram& d, const std::vector<int>& row_order);

enum class BumpStart {
  preceding_beat,  // backward scan begins at the beat before the landing
  landing_beat,    // the landing beat itself is examined first
};

class MalformedWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Card indices u_1..u_n (0 for C_0) built by the bump-count scan.
std::vector<int> cards_of_landing_word(const std::vector<int>& word, int b,
                                       BumpStart start = BumpStart::preceding_beat);
// States of the periodic b-ball pattern with card indices u; element j is
// the state at beat j. Throws std::invalid_argument when the cards do not
// describe a pattern.
Cycle states_of_cards(const std::vector<int>& u, int b);
// Landing word replayed from card indices: w_j = v when the ball landing at
// beat j was thrown as C_v.
std::vector<int> landing_word_of_cards(const std::vector<int>& u, int b);

Cycle pattern_of_landing_word(const std::vector<int>& word, int b,
                              BumpStart start = BumpStart::preceding_beat);

struct FamilyReport {
  int b = 0;
  int n = 0;
  std::uint64_t diagrams = 0;
  std::uint64_t word_count = 0;      // sum over partitions of t! * |diagrams|
  Rational display_word_count;       // sum of t! * displayed D_lambda
  std::uint64_t cyclic_inputs = 0;   // (diagram, cyclic row order) pairs
  std::uint64_t malformed = 0;
  std::uint64_t invalid = 0;
  std::uint64_t nonprime = 0;
  std::uint64_t landing_mismatch = 0;
  std::uint64_t collisions = 0;      // cyclic inputs sharing a cycle with another input
  std::uint64_t distinct = 0;
  Rational bound;                    // lower_bound_normal_b(b, n)
  std::vector<Cycle> cycles;         // distinct canonical cycles, sorted
};

FamilyReport generate_family(int b, int n, BumpStart start = BumpStart::preceding_beat);

}  // namespace pjl

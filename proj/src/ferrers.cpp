#include "pjl/ferrers.hpp"

#include "pjl/counting.hpp"
#include "pjl/oracle.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace pjl {

namespace {

void check_partition(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("partition has no parts");
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i && p[i] >= p[i - 1]) throw std::invalid_argument("partition parts must be strictly decreasing");
  }
}

}  // namespace

void validate_diagram(const FilledDiagram& d) {
  check_partition(d.partition);
  if (d.b < 2) throw std::invalid_argument("diagram needs b >= 2");
  if (d.rows.size() != d.partition.size()) throw std::invalid_argument("diagram row count mismatch");
  std::vector<int> high(d.partition[0], 0);
  for (size_t i = 0; i < d.rows.size(); ++i) {
    const auto& row = d.rows[i];
    if (static_cast<int>(row.size()) != d.partition[i]) throw std::invalid_argument("diagram row length mismatch");
    for (size_t j = 0; j < row.size(); ++j) {
      int v = row[j];
      bool last = j + 1 == row.size();
      if (v < 0 || v > d.b) throw std::invalid_argument("diagram entry out of range");
      if (last != (v == d.b))
        throw std::invalid_argument(fmt::format("row {} must end in {} and hold it nowhere else", i + 1, d.b));
      if (v >= d.b - 1 && ++high[j] > 1)
        throw std::invalid_argument(fmt::format("column {} holds two entries from {{b-1, b}}", j + 1));
    }
  }
}

std::vector<FilledDiagram> enumerate_filled_diagrams(const Partition& p, int b) {
  check_partition(p);
  if (b < 2) throw std::invalid_argument("diagram needs b >= 2");
  const int t = static_cast<int>(p.size());
  std::vector<int> high(p[0], 0);
  for (int part : p) high[part - 1] = 1;
  FilledDiagram cur{p, b, {}};
  for (int part : p) {
    cur.rows.emplace_back(part, 0);
    cur.rows.back().back() = b;
  }
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j + 1 < p[i]; ++j) free_cells.emplace_back(i, j);
  std::vector<FilledDiagram> out;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == free_cells.size()) {
      out.push_back(cur);
      return;
    }
    auto [i, j] = free_cells[idx];
    for (int v = 0; v <= b - 1; ++v) {
      if (v == b - 1 && high[j]) continue;
      if (v == b - 1) high[j] = 1;
      cur.rows[i][j] = v;
      rec(idx + 1);
      if (v == b - 1) high[j] = 0;
    }
    cur.rows[i][j] = 0;
  };
  rec(0);
  return out;
}

BigInt count_filled_diagrams(const Partition& p, int b) {
  check_partition(p);
  BigInt r = 1;
  for (int j = 1; j <= p[0]; ++j) {
    int h = static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; }));
    bool row_ends = std::find(p.begin(), p.end(), j) != p.end();
    r *= pow_int(b - 1, h - 1);
    if (!row_ends) r *= b - 1 + h;
  }
  return r;
}

Rational diagram_count_display(const Partition& p, int b) {
  check_partition(p);
  const int t = static_cast<int>(p.size());
  const int n = std::accumulate(p.begin(), p.end(), 0);
  BigInt num = pow_int(b - 1, n), den = binomial(t + b - 1, b) * factorial(t);
  for (int i = 1; i <= t; ++i) {
    num *= pow_int(i + b - 1, p[i - 1]);
    den *= pow_int(i + b - 2, p[i - 1]);
  }
  return Rational(num, den);
}

std::vector<int> landing_word(const FilledDiagram& d, const std::vector<int>& row_order) {
  std::vector<int> sorted = row_order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(d.rows.size());
  std::iota(expect.begin(), expect.end(), 0);
  if (sorted != expect) throw std::invalid_argument("row order is not a permutation of the rows");
  std::vector<int> w;
  for (int r : row_order) w.insert(w.end(), d.rows[r].rbegin(), d.rows[r].rend());
  return w;
}

std::vector<int> cards_of_landing_word(const std::vector<int>& word, int b, BumpStart start) {
  const int n = static_cast<int>(word.size());
  if (n == 0) throw MalformedWord("empty landing word");
  constexpr int kUnassigned = -1;
  std::vector<int> u(n, kUnassigned);
  for (int j = 0; j < n; ++j) {
    if (word[j] < 0 || word[j] > b) throw MalformedWord(fmt::format("word entry {} outside [0,{}]", word[j], b));
    if (word[j] == 0) u[j] = 0;
  }
  for (int v = 1; v <= b; ++v) {
    for (int j = 0; j < n; ++j) {
      if (word[j] != v) continue;
      int bump = 0;
      int k = start == BumpStart::landing_beat ? j : (j - 1 + n) % n;
      for (int steps = 0;; ++steps) {
        if (steps > n * b)
          throw MalformedWord(fmt::format("bump scan for landing at beat {} did not terminate", j + 1));
        if (u[k] == kUnassigned || u[k] > bump) ++bump;
        if (bump == v) break;
        k = (k - 1 + n) % n;
      }
      if (u[k] != kUnassigned)
        throw MalformedWord(fmt::format("beat {} receives two throw cards", k + 1));
      u[k] = v;
    }
  }
  return u;
}

Cycle states_of_cards(const std::vector<int>& u, int b) {
  const int n = static_cast<int>(u.size());
  if (n == 0 || b < 1) throw std::invalid_argument("states_of_cards needs cards and b >= 1");
  const int limit = 4 * b * n + 4;
  Cycle out;
  for (int s = 0; s < n; ++s) {
    std::vector<int> bits;
    for (int r = 1; r <= b; ++r) {
      int rank = r, tau = 0, k = s;
      while (true) {
        ++tau;
        int x = u[k % n];
        ++k;
        if (x < 0 || x > b) throw std::invalid_argument(fmt::format("card C{} outside C0..C{}", x, b));
        if (rank == 1 && x != 0) break;
        if (rank > 1 && x >= rank) --rank;
        if (tau > limit) throw std::invalid_argument("card sequence never lands some ball");
      }
      if (static_cast<int>(bits.size()) < tau) bits.resize(tau, 0);
      if (bits[tau - 1]) throw std::invalid_argument("card sequence lands two balls on one beat");
      bits[tau - 1] = 1;
    }
    out.push_back(normal_state(std::move(bits)));
  }
  return out;
}

std::vector<int> landing_word_of_cards(const std::vector<int>& u, int b) {
  const int n = static_cast<int>(u.size());
  std::vector<int> w(n, 0);
  const int limit = 4 * b * n + 4;
  for (int s = 0; s < n; ++s) {
    if (u[s] == 0) continue;
    int rank = u[s], k = s + 1, steps = 0;
    while (true) {
      int x = u[k % n];
      if (rank == 1 && x != 0) break;
      if (rank > 1 && x >= rank) --rank;
      ++k;
      if (++steps > limit) throw std::invalid_argument("card sequence never lands some ball");
    }
    w[k % n] = u[s];
  }
  return w;
}

Cycle pattern_of_landing_word(const std::vector<int>& word, int b, BumpStart start) {
  Cycle states = states_of_cards(cards_of_landing_word(word, b, start), b);
  if (!is_closed_walk(states)) throw MalformedWord("generated cards do not close into a walk");
  return states;
}

FamilyReport generate_family(int b, int n, BumpStart start) {
  if (b < 2 || n < 1) throw std::invalid_argument("generate_family needs b >= 2 and n >= 1");
  FamilyReport rep;
  rep.b = b;
  rep.n = n;
  rep.bound = lower_bound_normal_b(b, n);
  auto less = [](const Cycle& a, const Cycle& c) { return compare_cycles(a, c) < 0; };
  std::set<Cycle, decltype(less)> seen(less);
  for (int t = 1; t <= max_parts(n); ++t) {
    for (const Partition& p : distinct_partitions(n, t)) {
      rep.display_word_count += diagram_count_display(p, b) * Rational(factorial(t));
      for (const FilledDiagram& d : enumerate_filled_diagrams(p, b)) {
        ++rep.diagrams;
        std::vector<int> order(t);
        std::iota(order.begin(), order.end(), 0);
        do {
          ++rep.word_count;
          const bool cyclic_rep = order[0] == 0;
          rep.cyclic_inputs += cyclic_rep;
          std::vector<int> w = landing_word(d, order);
          std::vector<int> u;
          Cycle states;
          try {
            u = cards_of_landing_word(w, b, start);
            states = states_of_cards(u, b);
          } catch (const std::invalid_argument&) {
            ++rep.malformed;
            continue;
          }
          if (!is_closed_walk(states)) {
            ++rep.invalid;
            continue;
          }
          if (landing_word_of_cards(u, b) != w) ++rep.landing_mismatch;
          if (!is_prime(states)) {
            ++rep.nonprime;
            continue;
          }
          bool fresh = seen.insert(canonicalize_cycle(states)).second;
          if (cyclic_rep && !fresh) ++rep.collisions;
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
  rep.distinct = seen.size();
  rep.cycles.assign(seen.begin(), seen.end());
  return rep;
}

}  // namespace pjl

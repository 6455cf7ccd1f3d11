#include "pjl/core_states.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>
#include <numeric>

namespace pjl {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::normal: return "normal";
    case Variant::multiplex: return "multiplex";
    case Variant::colored: return "colored";
    case Variant::passing: return "passing";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "normal") return Variant::normal;
  if (name == "multiplex" || name == "mpx") return Variant::multiplex;
  if (name == "colored") return Variant::colored;
  if (name == "passing") return Variant::passing;
  throw std::invalid_argument(fmt::format("unknown variant '{}'", name));
}

int State::length() const {
  return variant == Variant::passing ? static_cast<int>(cells.size()) / k
                                     : static_cast<int>(cells.size());
}

int State::balls() const {
  if (variant == Variant::colored)
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](int c) { return c != 0; }));
  return std::accumulate(cells.begin(), cells.end(), 0);
}

int State::at(int beat, int hand) const {
  size_t idx = variant == Variant::passing ? static_cast<size_t>(beat) * k + hand
                                           : static_cast<size_t>(beat);
  return idx < cells.size() ? cells[idx] : 0;
}

namespace {

// Lower rank sorts first.
int cell_rank(Variant v, int cell) {
  if (v == Variant::colored) return cell == 0 ? INT_MAX : cell;
  return -cell;
}

}  // namespace

int compare_states(const State& a, const State& b) {
  if (a.variant != b.variant) return a.variant < b.variant ? -1 : 1;
  if (a.k != b.k) return a.k < b.k ? -1 : 1;
  size_t n = std::max(a.cells.size(), b.cells.size());
  for (size_t i = 0; i < n; ++i) {
    int x = i < a.cells.size() ? a.cells[i] : 0;
    int y = i < b.cells.size() ? b.cells[i] : 0;
    if (x != y) return cell_rank(a.variant, x) < cell_rank(a.variant, y) ? -1 : 1;
  }
  return 0;
}

void trim(State& s) {
  if (s.variant == Variant::passing) {
    size_t k = static_cast<size_t>(s.k);
    while (s.cells.size() >= k &&
           std::all_of(s.cells.end() - k, s.cells.end(), [](int c) { return c == 0; }))
      s.cells.resize(s.cells.size() - k);
  } else {
    while (!s.cells.empty() && s.cells.back() == 0) s.cells.pop_back();
  }
}

void validate(const State& s) {
  if (s.k < 1) throw std::invalid_argument(fmt::format("k must be >= 1, got {}", s.k));
  int hi = 1;
  switch (s.variant) {
    case Variant::normal:
      if (s.k != 1) throw std::invalid_argument("normal state must have k = 1");
      break;
    case Variant::multiplex:
    case Variant::colored:
      hi = s.k;
      break;
    case Variant::passing:
      if (s.cells.size() % s.k != 0)
        throw std::invalid_argument("passing state cells not a whole number of beats");
      break;
  }
  for (int c : s.cells)
    if (c < 0 || c > hi)
      throw std::invalid_argument(
          fmt::format("{} state entry {} outside [0,{}]", variant_name(s.variant), c, hi));
  State t = s;
  trim(t);
  if (t.cells.size() != s.cells.size())
    throw std::invalid_argument("state is not trimmed (trailing zero beats)");
}

State normal_state(std::vector<int> bits) {
  State s{Variant::normal, 1, std::move(bits)};
  trim(s);
  validate(s);
  return s;
}

State multiplex_state(std::vector<int> entries, int k) {
  State s{Variant::multiplex, k, std::move(entries)};
  trim(s);
  validate(s);
  return s;
}

State sigma(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("sigma coordinates must be >= 1");
  if (i > j) std::swap(i, j);
  std::vector<int> e(j, 0);
  e[i - 1] += 1;
  e[j - 1] += 1;
  return multiplex_state(std::move(e), 2);
}

State colored_state(std::vector<int> entries, int colors) {
  State s{Variant::colored, colors, std::move(entries)};
  trim(s);
  validate(s);
  return s;
}

State passing_state(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("passing state needs at least one hand");
  int k = static_cast<int>(rows.size());
  size_t len = 0;
  for (const auto& r : rows) len = std::max(len, r.size());
  State s{Variant::passing, k, std::vector<int>(len * k, 0)};
  for (int h = 0; h < k; ++h)
    for (size_t j = 0; j < rows[h].size(); ++j) s.cells[j * k + h] = rows[h][j];
  trim(s);
  validate(s);
  return s;
}

namespace {

std::string strip(std::string_view t) {
  size_t a = 0, b = t.size();
  while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
  return std::string(t.substr(a, b - a));
}

constexpr std::string_view kLangle = "\xE2\x9F\xA8";  // ⟨
constexpr std::string_view kRangle = "\xE2\x9F\xA9";  // ⟩
constexpr std::string_view kEpsilon = "\xCE\xB5";     // ε

std::vector<int> parse_int_list(std::string body) {
  for (char& ch : body)
    if (ch == ',') ch = ' ';
  std::vector<int> out;
  size_t i = 0;
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
    std::string tok = body.substr(i, j - i);
    if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument(fmt::format("bad state entry '{}'", tok));
    out.push_back(std::stoi(tok));
    i = j;
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }
bool ends_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

std::vector<int> parse_entries(const std::string& t, bool allow_digit_string) {
  std::string body = t;
  if (starts_with(body, kLangle) && ends_with(body, kRangle)) {
    body = body.substr(kLangle.size(), body.size() - kLangle.size() - kRangle.size());
    return parse_int_list(body);
  }
  if (!body.empty() && body.front() == '<' && body.back() == '>')
    return parse_int_list(body.substr(1, body.size() - 2));
  bool plain_digits = std::all_of(body.begin(), body.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (allow_digit_string && plain_digits) {
    std::vector<int> out;
    for (char c : body) out.push_back(c - '0');
    return out;
  }
  return parse_int_list(body);
}

}  // namespace

State parse_state(Variant v, std::string_view text, int k) {
  std::string t = strip(text);
  bool empty = t.empty() || t == kEpsilon || t == "<>" ||
               t == std::string(kLangle) + std::string(kRangle);
  switch (v) {
    case Variant::normal:
      return normal_state(empty ? std::vector<int>{} : parse_entries(t, true));
    case Variant::multiplex: {
      auto e = empty ? std::vector<int>{} : parse_entries(t, true);
      if (k <= 0) k = std::max(1, std::accumulate(e.begin(), e.end(), 0));
      return multiplex_state(std::move(e), k);
    }
    case Variant::colored: {
      auto e = empty ? std::vector<int>{} : parse_entries(t, false);
      if (k <= 0) k = std::max(1, e.empty() ? 1 : *std::max_element(e.begin(), e.end()));
      return colored_state(std::move(e), k);
    }
    case Variant::passing: {
      if (empty) return State{Variant::passing, std::max(k, 1), {}};
      std::vector<std::vector<int>> rows;
      size_t start = 0;
      while (true) {
        size_t sep = t.find_first_of(";/", start);
        std::string row = strip(std::string_view(t).substr(start, sep == std::string::npos ? std::string::npos : sep - start));
        std::vector<int> bits;
        for (char c : row) {
          if (c != '0' && c != '1')
            throw std::invalid_argument(fmt::format("bad passing row '{}'", row));
          bits.push_back(c - '0');
        }
        rows.push_back(std::move(bits));
        if (sep == std::string::npos) break;
        start = sep + 1;
      }
      if (k > 0 && static_cast<int>(rows.size()) != k)
        throw std::invalid_argument(fmt::format("expected {} hands, got {}", k, rows.size()));
      return passing_state(rows);
    }
  }
  throw std::invalid_argument("unknown variant");
}

std::string format_state(const State& s) {
  if (s.cells.empty()) return std::string(kEpsilon);
  std::string out;
  switch (s.variant) {
    case Variant::normal:
    case Variant::multiplex:
      if (std::any_of(s.cells.begin(), s.cells.end(), [](int c) { return c > 9; }))
        return format_angle(s);
      for (int c : s.cells) out += static_cast<char>('0' + c);
      return out;
    case Variant::colored:
      for (size_t i = 0; i < s.cells.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s.cells[i]);
      }
      return out;
    case Variant::passing:
      for (int h = 0; h < s.k; ++h) {
        if (h) out += ';';
        for (int j = 0; j < s.length(); ++j) out += static_cast<char>('0' + s.at(j, h));
      }
      return out;
  }
  return out;
}

std::string format_angle(const State& s) {
  auto row = [&](int h) {
    std::string r(kLangle);
    for (int j = 0; j < s.length(); ++j) {
      if (j) r += ',';
      r += std::to_string(s.at(j, h));
    }
    return r + std::string(kRangle);
  };
  if (s.variant != Variant::passing) return row(0);
  std::string out;
  for (int h = 0; h < s.k; ++h) {
    if (h) out += ';';
    out += row(h);
  }
  return out;
}

std::vector<int> color_multiset(const State& s) {
  std::vector<int> out;
  for (int c : s.cells)
    if (c) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> violated_condition(const State& from, const State& to) {
  if (from.variant != to.variant || from.k != to.k) return 0;
  if (from.balls() != to.balls()) return 0;
  if (from.variant == Variant::colored && color_multiset(from) != color_multiset(to)) return 0;
  int hands = from.variant == Variant::passing ? from.k : 1;
  int len = std::max(from.length(), to.length() + 1);
  for (int i = 1; i < len; ++i) {
    for (int h = 0; h < hands; ++h) {
      int a = from.at(i, h), b = to.at(i - 1, h);
      bool bad = from.variant == Variant::colored ? (a != 0 && a != b) : a > b;
      if (bad) return i;
    }
  }
  return std::nullopt;
}

bool is_valid_transition(const State& from, const State& to) {
  return !violated_condition(from, to).has_value();
}

void require_transition(const State& from, const State& to) {
  if (auto c = violated_condition(from, to)) {
    if (*c == 0)
      throw InvalidTransition(0, fmt::format("invalid transition {} -> {}: ball count or colors differ",
                                             format_state(from), format_state(to)));
    throw InvalidTransition(*c, fmt::format("invalid transition {} -> {}: condition {} fails",
                                            format_state(from), format_state(to), *c));
  }
}

namespace {

State shifted(const State& s) {
  State t = s;
  int drop = s.variant == Variant::passing ? s.k : 1;
  if (static_cast<int>(t.cells.size()) >= drop)
    t.cells.erase(t.cells.begin(), t.cells.begin() + drop);
  else
    t.cells.clear();
  return t;
}

int capacity(const State& s) {
  switch (s.variant) {
    case Variant::multiplex: return s.k;
    default: return 1;
  }
}

}  // namespace

std::vector<State> successors(const State& s, int cap) {
  if (cap < s.length())
    throw std::invalid_argument(
        fmt::format("height cap {} is below state length {}", cap, s.length()));
  State base = shifted(s);
  int width = s.variant == Variant::passing ? s.k : 1;
  base.cells.resize(static_cast<size_t>(cap) * width, 0);
  std::vector<State> out;

  if (s.variant == Variant::colored) {
    int c = s.at(0);
    if (c == 0) {
      out.push_back(base);
    } else {
      for (int i = 0; i < cap; ++i) {
        if (base.cells[i] != 0) continue;
        State t = base;
        t.cells[i] = c;
        out.push_back(std::move(t));
      }
    }
  } else {
    int landed = 0;
    for (int h = 0; h < width; ++h) landed += s.at(0, h);
    int cellcap = capacity(s);
    int ncells = static_cast<int>(base.cells.size());
    // place `landed` indistinguishable balls; cells visited in increasing order
    std::function<void(int, int, State&)> place = [&](int from, int left, State& cur) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int i = from; i < ncells; ++i) {
        if (cur.cells[i] >= cellcap) continue;
        ++cur.cells[i];
        place(i, left - 1, cur);
        --cur.cells[i];
      }
    };
    State cur = base;
    place(0, landed, cur);
  }
  for (auto& t : out) trim(t);
  std::sort(out.begin(), out.end(), StateLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_card(const Card& c) {
  switch (c.kind) {
    case Card::Kind::C: return fmt::format("C{}", c.index);
    case Card::Kind::D0: return "D0";
    case Card::Kind::Da: return "Da";
    case Card::Kind::Db: return "Db";
    case Card::Kind::Dc: return "Dc";
  }
  return "?";
}

Card parse_card(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (ch != '_') t += ch;
  if (t.size() >= 2 && t[0] == 'C' &&
      std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return Card::c(std::stoi(t.substr(1)));
  if (t == "D0") return {Card::Kind::D0, 0};
  if (t == "Da") return {Card::Kind::Da, 0};
  if (t == "Db") return {Card::Kind::Db, 0};
  if (t == "Dc") return {Card::Kind::Dc, 0};
  throw std::invalid_argument(fmt::format("unknown card '{}'", text));
}

State uncolored(const State& s) {
  if (s.variant != Variant::colored) throw std::invalid_argument("uncolored: not a colored state");
  std::vector<int> bits;
  for (int c : s.cells) bits.push_back(c ? 1 : 0);
  return normal_state(std::move(bits));
}

State column_sums(const State& s) {
  if (s.variant != Variant::passing) throw std::invalid_argument("column_sums: not a passing state");
  std::vector<int> e(s.length(), 0);
  for (int j = 0; j < s.length(); ++j)
    for (int h = 0; h < s.k; ++h) e[j] += s.at(j, h);
  return multiplex_state(std::move(e), s.k);
}

namespace {

Card normal_card(const State& from, const State& to) {
  if (from.at(0) == 0) return Card::c(0);
  for (int p = 0; p < to.length(); ++p) {
    if (to.at(p) > from.at(p + 1)) {
      int rank = 0;
      for (int q = 0; q <= p; ++q) rank += to.at(q);
      return Card::c(rank);
    }
  }
  throw std::logic_error("normal_card: landed ball not found");
}

bool all_simple(const State& s) {
  return std::all_of(s.cells.begin(), s.cells.end(), [](int c) { return c <= 1; });
}

State as_normal(const State& s) {
  return State{Variant::normal, 1, s.cells};
}

// positions (1-based, i <= j) of a 2-ball multiplex state
std::pair<int, int> coords(const State& s) {
  std::vector<int> p;
  for (int i = 0; i < s.length(); ++i)
    for (int c = 0; c < s.at(i); ++c) p.push_back(i + 1);
  return {p.at(0), p.at(1)};
}

Card multiplex_card(const State& from, const State& to) {
  if (all_simple(from) && all_simple(to)) return normal_card(as_normal(from), as_normal(to));
  if (from.balls() != 2)
    throw std::domain_error(fmt::format("no card vocabulary for {}-ball multiplex transition {} -> {}",
                                        from.balls(), format_state(from), format_state(to)));
  auto [i, j] = coords(from);
  auto [x, y] = coords(to);
  if (i == j) {
    if (i > 1) return {Card::Kind::D0, 0};
    return {x == y ? Card::Kind::Dc : Card::Kind::Db, 0};
  }
  // from is sigma(1, j) and to is the double sigma(j-1, j-1)
  return {Card::Kind::Da, 0};
}

}  // namespace

Card transition_card(const State& from, const State& to) {
  require_transition(from, to);
  switch (from.variant) {
    case Variant::normal: return normal_card(from, to);
    case Variant::multiplex: return multiplex_card(from, to);
    case Variant::colored: return normal_card(uncolored(from), uncolored(to));
    case Variant::passing: return multiplex_card(column_sums(from), column_sums(to));
  }
  throw std::logic_error("transition_card: unknown variant");
}

std::vector<Card> cards_of_cycle(const Cycle& cycle) {
  std::vector<Card> out;
  for (size_t i = 0; i < cycle.size(); ++i)
    out.push_back(transition_card(cycle[i], cycle[(i + 1) % cycle.size()]));
  return out;
}

std::string format_cards(const std::vector<Card>& cards) {
  std::string out;
  for (size_t i = 0; i < cards.size(); ++i) {
    if (i) out += ' ';
    out += format_card(cards[i]);
  }
  return out;
}

namespace {

bool lands(const Card& c) {
  return !((c.kind == Card::Kind::C && c.index == 0) || c.kind == Card::Kind::D0);
}

}  // namespace

Cycle cycle_from_cards(const State& first, const std::vector<Card>& cards) {
  if (cards.empty()) throw std::invalid_argument("cycle_from_cards: empty card sequence");
  const int n = static_cast<int>(cards.size());
  const int cap = std::max(first.length(), std::max(1, first.balls()) * n);
  const int width = first.variant == Variant::passing ? first.k : 1;
  std::vector<Cycle> found;
  Cycle path{first};
  long long budget = 5'000'000;

  // s is the state at beat `beat`; balls in it must land on landing cards,
  // and those in flight past the period must match `first`.
  auto consistent = [&](const State& s, int beat) {
    for (int q = 0; q < s.length(); ++q) {
      int occupied = 0;
      for (int h = 0; h < width; ++h) occupied += s.at(q, h);
      if (!occupied) continue;
      int when = beat + q;
      if (when < n) {
        if (!lands(cards[when])) return false;
      } else {
        int wq = when - n;
        for (int h = 0; h < width; ++h)
          if (s.at(q, h) > first.at(wq, h)) return false;
      }
    }
    return true;
  };

  std::function<void(int)> dfs = [&](int beat) {
    if (--budget < 0) throw std::runtime_error("cycle_from_cards: search budget exhausted");
    const State cur = path.back();  // copy: path grows below
    for (const State& nxt : successors(cur, std::max(cap, cur.length()))) {
      Card c;
      try {
        c = transition_card(cur, nxt);
      } catch (const std::domain_error&) {
        continue;
      }
      if (c != cards[beat]) continue;
      if (beat + 1 == n) {
        if (nxt == first) found.push_back(path);
        continue;
      }
      if (!consistent(nxt, beat + 1)) continue;
      path.push_back(nxt);
      dfs(beat + 1);
      path.pop_back();
    }
  };
  if (!consistent(first, 0)) throw std::invalid_argument("cycle_from_cards: first state contradicts cards");
  dfs(0);
  if (found.empty()) throw std::invalid_argument("cycle_from_cards: no closed walk carries these cards");
  if (found.size() > 1)
    throw std::invalid_argument(fmt::format("cycle_from_cards: {} closed walks carry these cards", found.size()));
  return found.front();
}

State lift(const State& s) {
  if (s.variant != Variant::normal) throw std::invalid_argument("lift: normal states only");
  std::vector<int> bits = s.cells;
  bits.insert(bits.begin(), 1);
  return normal_state(std::move(bits));
}

}  // namespace pjl

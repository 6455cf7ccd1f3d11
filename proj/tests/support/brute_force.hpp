#pragma once

// Slow reference implementations used only by the tests. Nothing here calls
// into the library's successor, canonicalization or card code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bf {

enum class Kind { normal, multiplex, colored, passing };

// cells[j*hands + h]: entry for hand h landing in j+1 beats, trailing zero
// beats trimmed. Colored cells hold color ids.
struct St {
  std::vector<int> cells;
  bool operator<(const St& o) const { return cells < o.cells; }
  bool operator==(const St& o) const { return cells == o.cells; }
};

struct Space {
  Kind kind = Kind::normal;
  int balls = 2;
  int k = 1;  // capacity, colors or hands
  std::vector<int> colors;  // colored: required sorted color multiset, empty for any
  int hands() const { return kind == Kind::passing ? k : 1; }
};

inline void trim(St& s, int hands) {
  while (!s.cells.empty()) {
    bool zero = true;
    for (int h = 0; h < hands; ++h) zero = zero && s.cells[s.cells.size() - 1 - h] == 0;
    if (!zero) break;
    s.cells.resize(s.cells.size() - hands);
  }
}

inline int cell(const St& s, int beat, int hand, int hands) {
  size_t i = static_cast<size_t>(beat) * hands + hand;
  return i < s.cells.size() ? s.cells[i] : 0;
}

inline int ball_count(const Space& sp, const St& s) {
  int n = 0;
  for (int v : s.cells) n += sp.kind == Kind::colored ? (v != 0) : v;
  return n;
}

inline std::vector<int> colors_of(const St& s) {
  std::vector<int> c;
  for (int v : s.cells)
    if (v) c.push_back(v);
  std::sort(c.begin(), c.end());
  return c;
}

// Every state with sp.balls balls and length <= len: all vectors over the
// per-cell alphabet, filtered.
inline std::vector<St> states(const Space& sp, int len) {
  const int hands = sp.hands();
  const int ncells = len * hands;
  const int top = sp.kind == Kind::normal || sp.kind == Kind::passing ? 1 : sp.k;
  std::vector<St> out;
  std::vector<int> cur(ncells, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == ncells) {
      if (left) return;
      St s{cur};
      trim(s, hands);
      if (sp.kind == Kind::colored && !sp.colors.empty() && colors_of(s) != sp.colors) return;
      out.push_back(s);
      return;
    }
    for (int v = 0; v <= top; ++v) {
      int used = sp.kind == Kind::colored ? (v != 0) : v;
      if (used > left) break;
      cur[i] = v;
      rec(i + 1, left - used);
    }
    cur[i] = 0;
  };
  rec(0, sp.balls);
  std::sort(out.begin(), out.end());
  return out;
}

// The transition condition: entry i+1 of `a` fits under entry i of `b`
// (colored: entry i+1 of `a`, when present, equals entry i of `b`), with
// equal ball counts and color multisets.
inline bool edge(const Space& sp, const St& a, const St& b) {
  if (ball_count(sp, a) != ball_count(sp, b)) return false;
  if (sp.kind == Kind::colored && colors_of(a) != colors_of(b)) return false;
  const int hands = sp.hands();
  const int len = static_cast<int>(std::max(a.cells.size(), b.cells.size())) / hands + 2;
  for (int i = 1; i < len; ++i)
    for (int h = 0; h < hands; ++h) {
      int x = cell(a, i, h, hands), y = cell(b, i - 1, h, hands);
      if (sp.kind == Kind::colored ? (x != 0 && x != y) : x > y) return false;
    }
  return true;
}

using Cyc = std::vector<St>;

// Simple cycles of length n, each reported once, starting at its least
// state in vector order. `through`, when set, keeps cycles containing it.
inline std::vector<Cyc> prime_cycles(const Space& sp, int n, int cap, const std::optional<St>& through = {}) {
  const auto vs = states(sp, cap);
  const int m = static_cast<int>(vs.size());
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (edge(sp, vs[i], vs[j])) adj[i].push_back(j);
  std::vector<Cyc> out;
  std::vector<int> path;
  std::vector<char> on(m, 0);
  std::function<void(int, int)> dfs = [&](int root, int v) {
    if (static_cast<int>(path.size()) == n) {
      if (std::find(adj[v].begin(), adj[v].end(), root) == adj[v].end()) return;
      Cyc c;
      for (int x : path) c.push_back(vs[x]);
      if (!through || std::find(c.begin(), c.end(), *through) != c.end()) out.push_back(c);
      return;
    }
    for (int u : adj[v]) {
      if (u <= root || on[u]) continue;
      on[u] = 1;
      path.push_back(u);
      dfs(root, u);
      path.pop_back();
      on[u] = 0;
    }
  };
  for (int r = 0; r < m; ++r) {
    on[r] = 1;
    path = {r};
    dfs(r, r);
    on[r] = 0;
  }
  return out;
}

// Cycle as a rotation-free key: the least rotation of its state list.
inline Cyc least_rotation(const Cyc& c) {
  Cyc best = c;
  for (size_t r = 1; r < c.size(); ++r) {
    Cyc rot(c.begin() + r, c.end());
    rot.insert(rot.end(), c.begin(), c.begin() + r);
    best = std::min(best, rot);
  }
  return best;
}

// Colored 2-color cycles up to swapping the colors, by Burnside: orbits =
// (all + cycles fixed by the swap) / 2.
inline std::uint64_t colored_orbits_2(const std::vector<Cyc>& labeled) {
  std::set<Cyc> keys;
  for (const auto& c : labeled) keys.insert(least_rotation(c));
  std::uint64_t fixed = 0;
  for (const auto& key : keys) {
    Cyc swapped = key;
    for (auto& s : swapped)
      for (auto& v : s.cells)
        if (v) v = 3 - v;
    if (least_rotation(swapped) == key) ++fixed;
  }
  return (keys.size() + fixed) / 2;
}

// 2-ball normal: number of transitions where the landing ball is thrown
// above the ball still in the air.
inline int top_throws_2(const Cyc& c) {
  int t = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    const St& a = c[i];
    const St& b = c[(i + 1) % c.size()];
    if (a.cells.empty() || a.cells[0] == 0) continue;
    int other = -1;
    for (size_t j = 1; j < a.cells.size(); ++j)
      if (a.cells[j]) other = static_cast<int>(j) - 1;
    int last = static_cast<int>(b.cells.size()) - 1;
    if (last > other) ++t;
  }
  return t;
}

// Filled diagrams by trying every filling of {0..b}^cells.
inline std::uint64_t filled_diagrams(const std::vector<int>& parts, int b) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    for (int j = 0; j < parts[i]; ++j) cells.push_back({i, j});
  std::vector<int> fill(cells.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    std::map<int, int> high;
    for (size_t c = 0; c < cells.size() && ok; ++c) {
      auto [i, j] = cells[c];
      bool right = j == parts[i] - 1;
      if (right != (fill[c] == b)) ok = false;
      if (fill[c] >= b - 1 && ++high[j] > 1) ok = false;
    }
    if (ok) ++count;
    size_t c = 0;
    while (c < fill.size() && fill[c] == b) fill[c++] = 0;
    if (c == fill.size()) break;
    ++fill[c];
  }
  return count;
}

// Infinite graph on explicit bit strings. Abbreviate a finite expansion
// (ones, then anything, then zeros): drop the leading ones and the zero after
// them, and trailing zeros.
inline std::string abbreviate(const std::string& e) {
  size_t i = e.find('0');
  if (i == std::string::npos) return "";
  std::string s = e.substr(i + 1);
  while (!s.empty() && s.back() == '0') s.pop_back();
  return s;
}

inline std::string expand(const std::string& s, int pad) {
  return std::string(pad, '1') + "0" + s + std::string(pad, '0');
}

inline std::string flip_reverse(const std::string& s) {
  const int pad = static_cast<int>(s.size()) + 2;
  std::string e = expand(s, pad);
  for (char& ch : e) ch = ch == '0' ? '1' : '0';
  std::reverse(e.begin(), e.end());
  return abbreviate(e);
}

// Next states: the lowest ball (a leading one) lands and is thrown to any
// empty slot. Results longer than max_len are dropped.
inline std::vector<std::string> inf_successors(const std::string& s, int max_len) {
  const int pad = max_len + 2;
  std::string e = expand(s, pad).substr(1);
  std::set<std::string> out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == '1') continue;
    std::string f = e;
    f[i] = '1';
    std::string a = abbreviate(f);
    if (static_cast<int>(a.size()) <= max_len) out.insert(a);
  }
  return {out.begin(), out.end()};
}

inline std::vector<std::string> inf_states(int max_len) {
  std::vector<std::string> out{""};
  for (int len = 1; len <= max_len; ++len)
    for (int mask = 0; mask < (1 << (len - 1)); ++mask) {
      std::string s;
      for (int i = 0; i < len - 1; ++i) s += (mask >> i & 1) ? '1' : '0';
      out.push_back(s + "1");
    }
  return out;
}

struct WalkTally {
  std::map<std::string, std::uint64_t> walks;   // walks containing the state
  std::map<std::string, std::uint64_t> visits;  // positions at the state
};

// Every walk with `len` transitions inside the window, enumerated one by one.
inline WalkTally tally_walks(int len, int max_len) {
  WalkTally t;
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& s : inf_states(max_len)) succ[s] = inf_successors(s, max_len);
  std::vector<std::string> path;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(path.size()) == len + 1) {
      std::set<std::string> seen(path.begin(), path.end());
      for (const auto& s : seen) ++t.walks[s];
      for (const auto& s : path) ++t.visits[s];
      return;
    }
    for (const auto& u : succ[path.back()]) {
      path.push_back(u);
      rec();
      path.pop_back();
    }
  };
  for (const auto& s : inf_states(max_len)) {
    path = {s};
    rec();
  }
  return t;
}

}  // namespace bf

#include "pjl/infinite.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace pjl {

void validate_abbrev(const AbbrevState& s) {
  for (char ch : s)
    if (ch != '0' && ch != '1') throw std::invalid_argument(fmt::format("abbreviated state '{}' is not binary", s));
  if (!s.empty() && s.back() != '1')
    throw std::invalid_argument(fmt::format("abbreviated state '{}' has trailing zeros", s));
}

AbbrevState parse_abbrev(const std::string& text) {
  if (text == "\xCE\xB5" || text == "e" || text.empty()) return "";
  validate_abbrev(text);
  return text;
}

std::string format_abbrev(const AbbrevState& s) { return s.empty() ? "\xCE\xB5" : s; }

AbbrevState fr(const AbbrevState& s) {
  validate_abbrev(s);
  if (s.empty()) return s;
  // ...1 1 0 b1..bL 0 0...  flips and reverses to  ...1 1 ~bL ~b(L-1)..~b1 1 0 0...
  // and ~bL = 0 becomes the new padding zero.
  AbbrevState out;
  for (size_t i = s.size() - 1; i-- > 0;) out += s[i] == '0' ? '1' : '0';
  out += '1';
  return out;
}

namespace {

AbbrevState rule2(const AbbrevState& s) {
  size_t z = s.find('0');
  return z == std::string::npos ? AbbrevState() : s.substr(z + 1);
}

}  // namespace

std::vector<AbbrevState> zero_flips(const AbbrevState& s, int max_len) {
  validate_abbrev(s);
  std::vector<AbbrevState> out{rule2(s)};
  for (int i = 0; i < max_len; ++i) {
    if (i < static_cast<int>(s.size()) && s[i] == '1') continue;
    AbbrevState t = s;
    if (static_cast<int>(t.size()) <= i) t.resize(i + 1, '0');
    t[i] = '1';
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<AbbrevState> successors_inf(const AbbrevState& s, int max_len) {
  if (static_cast<int>(s.size()) > max_len)
    throw std::invalid_argument(fmt::format("window {} excludes state '{}'", max_len, s));
  std::vector<AbbrevState> out = zero_flips(s, max_len);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_transition_inf(const AbbrevState& from, const AbbrevState& to) {
  validate_abbrev(from);
  validate_abbrev(to);
  if (rule2(from) == to) return true;
  if (to.size() < from.size()) return false;
  int diff = 0;
  for (size_t i = 0; i < to.size(); ++i) {
    char a = i < from.size() ? from[i] : '0';
    if (a == to[i]) continue;
    if (a == '1') return false;
    ++diff;
  }
  return diff == 1;
}

State realize(const AbbrevState& s, int b) {
  validate_abbrev(s);
  int ones = static_cast<int>(std::count(s.begin(), s.end(), '1'));
  if (ones > b)
    throw std::invalid_argument(fmt::format("state '{}' holds {} balls, more than b = {}", s, ones, b));
  std::vector<int> bits(b - ones, 1);
  bits.push_back(0);
  for (char ch : s) bits.push_back(ch - '0');
  return normal_state(std::move(bits));
}

std::vector<AbbrevState> window_states(int max_len) {
  std::vector<AbbrevState> out{""};
  for (int len = 1; len <= max_len; ++len) {
    for (unsigned long long mask = 0; mask < (1ULL << (len - 1)); ++mask) {
      AbbrevState s(len, '0');
      for (int i = 0; i < len - 1; ++i)
        if (mask >> i & 1) s[i] = '1';
      s[len - 1] = '1';
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

struct Window {
  std::vector<AbbrevState> states;
  std::unordered_map<AbbrevState, int> index;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

std::shared_ptr<const Window> window(int max_len) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Window>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_len);
  if (it != cache.end()) return it->second;
  auto w = std::make_shared<Window>();
  w->states = window_states(max_len);
  for (size_t i = 0; i < w->states.size(); ++i) w->index[w->states[i]] = static_cast<int>(i);
  w->out.resize(w->states.size());
  w->in.resize(w->states.size());
  for (size_t i = 0; i < w->states.size(); ++i)
    for (const AbbrevState& t : successors_inf(w->states[i], max_len)) {
      int j = w->index.at(t);
      w->out[i].push_back(j);
      w->in[j].push_back(static_cast<int>(i));
    }
  cache[max_len] = w;
  return w;
}

// ends[v] after `len` steps: number of walks of that length ending at v,
// optionally avoiding `skip`.
std::vector<BigInt> walk_ends(const Window& w, int len, int skip) {
  std::vector<BigInt> cur(w.states.size(), 1);
  if (skip >= 0) cur[skip] = 0;
  for (int step = 0; step < len; ++step) {
    std::vector<BigInt> nxt(w.states.size(), 0);
    for (size_t v = 0; v < w.states.size(); ++v) {
      if (cur[v] == 0) continue;
      for (int u : w.out[v])
        if (u != skip) nxt[u] += cur[v];
    }
    cur = std::move(nxt);
  }
  return cur;
}

BigInt sum(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const auto& x : v) s += x;
  return s;
}

// walks of `len` steps starting at v (no restriction)
BigInt walks_from(const Window& w, int v, int len) {
  std::vector<BigInt> cur(w.states.size(), 0);
  cur[v] = 1;
  for (int step = 0; step < len; ++step) {
    std::vector<BigInt> nxt(w.states.size(), 0);
    for (size_t x = 0; x < w.states.size(); ++x) {
      if (cur[x] == 0) continue;
      for (int u : w.out[x]) nxt[u] += cur[x];
    }
    cur = std::move(nxt);
  }
  return sum(cur);
}

}  // namespace

WalkCounts count_walks_through(const AbbrevState& s, int length, int max_len) {
  validate_abbrev(s);
  if (length < 0) throw std::invalid_argument("walk length must be >= 0");
  if (static_cast<int>(s.size()) > max_len)
    throw std::invalid_argument(fmt::format("window {} excludes state '{}'", max_len, s));
  auto w = window(max_len);
  const int v = w->index.at(s);
  WalkCounts out;
  out.walks = sum(walk_ends(*w, length, -1)) - sum(walk_ends(*w, length, v));
  for (int p = 0; p <= length; ++p) {
    BigInt into = walk_ends(*w, p, -1)[v];
    out.visits += into * walks_from(*w, v, length - p);
  }
  return out;
}

InfiniteCheck check_fr_involution(int max_len) {
  InfiniteCheck chk;
  for (const AbbrevState& s : window_states(max_len)) {
    ++chk.checked;
    AbbrevState f = fr(s);
    if (fr(f) != s || f.size() != s.size()) ++chk.violations;
  }
  return chk;
}

InfiniteCheck check_transition_reversal(int max_len) {
  InfiniteCheck chk;
  for (const AbbrevState& a : window_states(max_len))
    for (const AbbrevState& b : successors_inf(a, max_len)) {
      ++chk.checked;
      if (!is_transition_inf(fr(b), fr(a))) ++chk.violations;
    }
  return chk;
}

InfiniteCheck check_single_flip(int max_len) {
  InfiniteCheck chk;
  for (const AbbrevState& a : window_states(max_len)) {
    const auto flips = zero_flips(a, max_len);
    for (const AbbrevState& b : successors_inf(a, max_len)) {
      ++chk.checked;
      if (std::count(flips.begin(), flips.end(), b) != 1) ++chk.violations;
    }
  }
  return chk;
}

InfiniteCheck check_walk_bijection(int state_len, int max_walk, int max_len, bool multiplicity) {
  InfiniteCheck chk;
  for (const AbbrevState& s : window_states(state_len)) {
    const AbbrevState f = fr(s);
    for (int k = 0; k <= max_walk; ++k) {
      ++chk.checked;
      WalkCounts a = count_walks_through(s, k, max_len);
      WalkCounts b = count_walks_through(f, k, max_len);
      if (multiplicity ? a.visits != b.visits : a.walks != b.walks) ++chk.violations;
    }
  }
  return chk;
}

}  // namespace pjl

#include "pjl/oracle.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <queue>
#include <thread>

namespace pjl {

namespace {

ProgressFn g_progress;
std::mutex g_progress_mu;

void progress(const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_progress_mu);
  if (g_progress) g_progress(msg);
}

}  // namespace

void set_oracle_progress(ProgressFn fn) {
  std::lock_guard<std::mutex> lock(g_progress_mu);
  g_progress = std::move(fn);
}

void validate_query(const OracleQuery& q) {
  if (q.period < 1) throw std::invalid_argument(fmt::format("period must be >= 1, got {}", q.period));
  if (q.balls < 1) throw std::invalid_argument(fmt::format("balls must be >= 1, got {}", q.balls));
  if (q.k < 1) throw std::invalid_argument(fmt::format("k must be >= 1, got {}", q.k));
  if (q.cap && *q.cap < 1) throw std::invalid_argument(fmt::format("cap must be >= 1, got {}", *q.cap));
  if ((q.variant == Variant::multiplex || q.variant == Variant::colored) && q.k > q.balls)
    throw std::invalid_argument(fmt::format("k = {} exceeds ball count {}", q.k, q.balls));
  if (q.quotient_colors && q.variant != Variant::colored)
    throw std::invalid_argument("quotient_colors applies to colored queries only");
  if (q.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

int proven_cap(int balls, int period) { return std::max(1, balls * period); }

std::vector<int> default_colors(int balls, int colors) {
  std::vector<int> out;
  for (int i = 0; i < balls; ++i) out.push_back(i % colors + 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<State> all_states(const OracleQuery& q, int cap) {
  const int width = q.variant == Variant::passing ? q.k : 1;
  const int cellcap = q.variant == Variant::multiplex ? q.k : 1;
  const int kfield = q.variant == Variant::normal ? 1 : q.k;
  const int ncells = cap * width;
  std::vector<State> out;
  std::vector<int> cells(ncells, 0);
  const std::vector<int> colors = default_colors(q.balls, q.k);

  auto emit = [&]() {
    if (q.variant != Variant::colored) {
      State s{q.variant, kfield, cells};
      trim(s);
      out.push_back(std::move(s));
      return;
    }
    std::vector<int> pos;
    for (int i = 0; i < ncells; ++i)
      if (cells[i]) pos.push_back(i);
    std::vector<int> perm = colors;
    do {
      State s{Variant::colored, q.k, std::vector<int>(ncells, 0)};
      for (size_t i = 0; i < pos.size(); ++i) s.cells[pos[i]] = perm[i];
      trim(s);
      out.push_back(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
  };

  std::function<void(int, int)> place = [&](int from, int left) {
    if (left == 0) {
      emit();
      return;
    }
    for (int i = from; i < ncells; ++i) {
      if (cells[i] >= cellcap) continue;
      ++cells[i];
      place(i, left - 1);
      --cells[i];
    }
  };
  place(0, q.balls);
  std::sort(out.begin(), out.end(), StateLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Graph {
  std::vector<State> states;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  int index_of(const State& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s, StateLess{});
    if (it == states.end() || *it != s) return -1;
    return static_cast<int>(it - states.begin());
  }
};

Graph build_graph(std::vector<State> states, int cap) {
  Graph g;
  g.states = std::move(states);
  g.out.resize(g.states.size());
  g.in.resize(g.states.size());
  for (size_t i = 0; i < g.states.size(); ++i) {
    for (const State& t : successors(g.states[i], cap)) {
      int j = g.index_of(t);
      if (j < 0) throw std::logic_error("oracle: successor outside state table");
      g.out[i].push_back(j);
      g.in[j].push_back(static_cast<int>(i));
    }
  }
  return g;
}

struct RootResult {
  std::uint64_t count = 0;
  std::vector<Cycle> cycles;
};

struct Search {
  const Graph& g;
  int n;
  bool list;
  std::uint64_t budget;
  std::atomic<std::uint64_t>& nodes;
  std::atomic<std::uint64_t>& found;
  int cap;

  // Cycles through `root` using only vertices v with allowed(v).
  template <class Allowed>
  RootResult run(int root, Allowed allowed) const {
    RootResult res;
    const int V = static_cast<int>(g.states.size());
    std::vector<int> dist(V, -1);
    std::queue<int> bfs;
    dist[root] = 0;
    bfs.push(root);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      if (dist[v] >= n) continue;
      for (int u : g.in[v]) {
        if (dist[u] >= 0 || !allowed(u)) continue;
        dist[u] = dist[v] + 1;
        bfs.push(u);
      }
    }
    std::vector<char> on_path(V, 0);
    std::vector<int> path{root};
    on_path[root] = 1;

    std::function<void(int)> dfs = [&](int v) {
      if (budget && nodes.fetch_add(1, std::memory_order_relaxed) >= budget)
        throw BudgetExceeded(cap, found.load(), fmt::format("oracle budget of {} nodes exceeded at cap {}", budget, cap));
      const int d = static_cast<int>(path.size());
      for (int w : g.out[v]) {
        if (w == root) {
          if (d == n) {
            ++res.count;
            found.fetch_add(1, std::memory_order_relaxed);
            if (list) {
              Cycle c;
              for (int p : path) c.push_back(g.states[p]);
              res.cycles.push_back(std::move(c));
            }
          }
          continue;
        }
        if (on_path[w] || !allowed(w) || dist[w] < 0 || d + dist[w] > n) continue;
        on_path[w] = 1;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        on_path[w] = 0;
      }
    };
    if (dist[root] >= 0) dfs(root);
    return res;
  }
};

template <class Task>
void run_parallel(int tasks, int jobs, Task task) {
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= tasks) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next.store(tasks);
        return;
      }
    }
  };
  int nthreads = std::max(1, std::min(jobs, tasks));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
}

struct CapRun {
  std::uint64_t count = 0;
  std::vector<Cycle> cycles;
};

CapRun count_at_cap(const OracleQuery& q, int cap, bool need_list) {
  Graph g = build_graph(all_states(q, cap), cap);
  const int V = static_cast<int>(g.states.size());
  std::atomic<std::uint64_t> nodes{0}, found{0};
  Search search{g, q.period, need_list, q.budget, nodes, found, cap};
  std::vector<RootResult> per_root(V);
  run_parallel(V, q.jobs, [&](int r) { per_root[r] = search.run(r, [r](int v) { return v > r; }); });
  CapRun out;
  for (auto& rr : per_root) {
    out.count += rr.count;
    for (auto& c : rr.cycles) out.cycles.push_back(std::move(c));
  }
  return out;
}

template <class CountFn>
OracleResult sweep_caps(std::optional<int> fixed, int start, int hard, CountFn count) {
  auto t0 = std::chrono::steady_clock::now();
  OracleResult res;
  if (fixed) {
    CapRun r = count(*fixed);
    res.count = r.count;
    res.cycles = std::move(r.cycles);
    res.cap = *fixed;
    res.cap_stable = *fixed >= hard;
    res.sweep.emplace_back(*fixed, r.count);
  } else {
    int h = std::min(start, hard);
    CapRun cur = count(h);
    res.sweep.emplace_back(h, cur.count);
    progress(fmt::format("cap {}: {}", h, cur.count));
    while (h < hard) {
      CapRun nxt = count(h + 1);
      res.sweep.emplace_back(h + 1, nxt.count);
      progress(fmt::format("cap {}: {}", h + 1, nxt.count));
      if (nxt.count == cur.count) break;
      cur = std::move(nxt);
      ++h;
    }
    res.count = cur.count;
    res.cycles = std::move(cur.cycles);
    res.cap = h;
    res.cap_stable = true;
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

int compare_cycles(const Cycle& a, const Cycle& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = compare_states(a[i], b[i])) return c;
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool is_closed_walk(const Cycle& c) {
  if (c.empty()) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (!is_valid_transition(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

bool is_prime(const Cycle& c) {
  std::vector<State> s = c;
  std::sort(s.begin(), s.end(), StateLess{});
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

Cycle canonicalize_cycle(const Cycle& states) {
  if (!is_closed_walk(states)) throw std::invalid_argument("canonicalize_cycle: not a closed walk");
  const size_t n = states.size();
  auto rotation = [&](size_t r) {
    Cycle c;
    for (size_t i = 0; i < n; ++i) c.push_back(states[(r + i) % n]);
    return c;
  };
  Cycle best = rotation(0);
  for (size_t r = 1; r < n; ++r) {
    Cycle c = rotation(r);
    if (compare_cycles(c, best) < 0) best = std::move(c);
  }
  return best;
}

Cycle canonicalize_colors(const Cycle& states) {
  if (states.empty() || states.front().variant != Variant::colored) return canonicalize_cycle(states);
  std::vector<int> ids = color_multiset(states.front());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<int> image = ids;
  Cycle best;
  do {
    Cycle relabeled = states;
    for (State& s : relabeled)
      for (int& c : s.cells)
        if (c) c = image[std::lower_bound(ids.begin(), ids.end(), c) - ids.begin()];
    Cycle c = canonicalize_cycle(relabeled);
    if (best.empty() || compare_cycles(c, best) < 0) best = std::move(c);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

OracleResult enumerate_prime_cycles(const OracleQuery& q) {
  validate_query(q);
  const bool need_list = q.list || q.quotient_colors;
  OracleResult res = sweep_caps(q.cap, q.period + q.balls, proven_cap(q.balls, q.period),
                                [&](int cap) {
                                  CapRun r = count_at_cap(q, cap, need_list);
                                  if (q.quotient_colors) {
                                    std::vector<Cycle> reps;
                                    for (const Cycle& c : r.cycles) reps.push_back(canonicalize_colors(c));
                                    std::sort(reps.begin(), reps.end(),
                                              [](const Cycle& a, const Cycle& b) { return compare_cycles(a, b) < 0; });
                                    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
                                    r.count = reps.size();
                                    r.cycles = std::move(reps);
                                  }
                                  if (!q.list) r.cycles.clear();
                                  return r;
                                });
  return res;
}

OracleResult enumerate_prime_cycles_through(const State& state, int n, std::optional<int> cap, bool list,
                                            int jobs) {
  if (n < 1) throw std::invalid_argument(fmt::format("period must be >= 1, got {}", n));
  validate(state);
  OracleQuery q;
  q.variant = state.variant;
  q.balls = state.balls();
  q.period = n;
  q.k = state.k;
  q.jobs = jobs;
  if (q.balls < 1) throw std::invalid_argument("state carries no balls");
  std::vector<int> colors;
  if (state.variant == Variant::colored) colors = color_multiset(state);
  const int hard = std::max(proven_cap(q.balls, n), state.length());
  return sweep_caps(cap, std::max(n + q.balls, state.length()), hard, [&](int h) {
    if (h < state.length())
      throw std::invalid_argument(fmt::format("cap {} is below state length {}", h, state.length()));
    std::vector<State> states;
    if (state.variant == Variant::colored) {
      // restrict to the state's own color multiset
      OracleQuery cq = q;
      for (State& s : all_states(cq, h))
        if (color_multiset(s) == colors) states.push_back(std::move(s));
    } else {
      states = all_states(q, h);
    }
    Graph g = build_graph(std::move(states), h);
    int root = g.index_of(state);
    std::atomic<std::uint64_t> nodes{0}, found{0};
    Search search{g, n, list, 0, nodes, found, h};
    RootResult rr = search.run(root, [](int) { return true; });
    CapRun r;
    r.count = rr.count;
    for (Cycle& c : rr.cycles) r.cycles.push_back(canonicalize_cycle(c));
    std::sort(r.cycles.begin(), r.cycles.end(), [](const Cycle& a, const Cycle& b) { return compare_cycles(a, b) < 0; });
    return r;
  });
}

std::string listing_record(Variant v, int balls, const Cycle& c) {
  std::string states;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) states += '|';
    std::string s = format_state(c[i]);
    std::replace(s.begin(), s.end(), ';', '/');
    states += s;
  }
  std::string cards;
  try {
    cards = format_cards(cards_of_cycle(c));
  } catch (const std::domain_error&) {
    cards = "-";
  }
  return fmt::format("{};{};{};{};{}", variant_name(v), balls, c.size(), states, cards);
}

}  // namespace pjl

#include "pjl/cli.hpp"

#include "pjl/asymptotics.hpp"
#include "pjl/cache.hpp"
#include "pjl/core_states.hpp"
#include "pjl/counting.hpp"
#include "pjl/ferrers.hpp"
#include "pjl/infinite.hpp"
#include "pjl/oracle.hpp"
#include "pjl/partitions.hpp"

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

namespace pjl {

namespace {

enum class Format { plain, json, csv };

struct Globals {
  std::string cache_dir;
  int cap = 0;  // 0: automatic sweep
  std::optional<int> precision;
  std::string format = "plain";
  int jobs = 1;
};


struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

bool is_int64(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit(const Table& t, Format f, std::ostream& out) {
  if (f == Format::csv) {
    for (size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << csv_field(t.header[i]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return;
  }
  if (f == Format::json) {
    for (const auto& row : t.rows) {
      nlohmann::ordered_json j;
      for (size_t i = 0; i < row.size(); ++i) {
        const std::string& v = row[i];
        if (is_int64(v))
          j[t.header[i]] = std::stoll(v);
        else if (v == "true" || v == "false")
          j[t.header[i]] = v == "true";
        else
          j[t.header[i]] = v;
      }
      out << j.dump() << '\n';
    }
    return;
  }
  if (t.header.size() == 1) {
    for (const auto& row : t.rows) out << row[0] << '\n';
    return;
  }
  std::vector<size_t> width(t.header.size());
  for (size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& row : t.rows)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.find_first_of(", ") == std::string::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument(fmt::format("bad integer list '{}'", text));
      out.push_back(ch - '0');
    }
    return out;
  }
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    cur.erase(std::remove(cur.begin(), cur.end(), ' '), cur.end());
    if (cur.empty()) continue;
    size_t used = 0;
    int v = std::stoi(cur, &used);
    if (used != cur.size()) throw std::invalid_argument(fmt::format("bad integer list '{}'", text));
    out.push_back(v);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string join_states(const Cycle& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + format_state(c[i]);
  return s;
}

std::string yes(bool b) { return b ? "true" : "false"; }

int default_k(Variant v) {
  switch (v) {
    case Variant::normal:
      return 1;
    default:
      return 2;
  }
}

// Shared state for one invocation.
class Runner {
 public:
  Runner(Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  Format format() const {
    if (g_.format == "json") return Format::json;
    if (g_.format == "csv") return Format::csv;
    return Format::plain;
  }
  int digits(int fallback) const { return g_.precision.value_or(fallback); }
  std::optional<int> cap() const { return g_.cap > 0 ? std::optional<int>(g_.cap) : std::nullopt; }

  ResultCache& cache() {
    if (!cache_) {
      std::filesystem::path dir = g_.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g_.cache_dir);
      cache_.emplace(dir);
      load_c_cache(*cache_);
    }
    return *cache_;
  }
  void finish() {
    if (!cache_) return;
    store_c_cache(*cache_);
    cache_->flush();
  }

  void emit(const Table& t) { pjl::emit(t, format(), out_); }

  // count ------------------------------------------------------------------
  std::string count_value(const std::string& variant, int n, int b, int k) {
    cache();
    if (variant == "normal") {
      require_b(variant, b, 2);
      return to_string(count_normal_prime_2(n));
    }
    if (variant == "multiplex") {
      require_b(variant, b, 2);
      return to_string(count_multiplex_prime_2(n));
    }
    if (variant == "strict") {
      require_b(variant, b, 2);
      return to_string(count_strict_multiplex_2(n));
    }
    if (variant == "colored") {
      require_b(variant, b, 2);
      return to_string(count_colored_prime_2(n));
    }
    if (variant == "passing") {
      require_b(variant, b, 1);
      return to_string(count_passing_prime_1(n, k));
    }
    if (variant == "base") {
      require_b(variant, b, 2);
      return to_string(count_base_state_2(n));
    }
    if (variant == "bound-b") return to_string(lower_bound_normal_b(b, n));
    if (variant == "bound-passing-exact") return to_string(lower_bound_passing_2_exact(n, k, g_.jobs).total());
    if (variant == "bound-passing-closed") return to_string(lower_bound_passing_2_closed(n, k));
    if (variant == "bound-passing-conservative") return to_string(lower_bound_passing_2_conservative(n, k));
    throw std::invalid_argument(fmt::format("no closed form named '{}'", variant));
  }

  void count(const std::string& variant, int n, int b, int k, std::optional<int> to) {
    if (b == 0) b = variant == "passing" ? 1 : 2 + (variant == "bound-b");
    Table t{{"variant", "b", "n", "k", "value"}, {}};
    for (int m = n; m <= to.value_or(n); ++m)
      t.rows.push_back({variant, std::to_string(b), std::to_string(m), std::to_string(k), count_value(variant, m, b, k)});
    if (format() == Format::plain && !to) {
      out_ << t.rows[0][4] << '\n';
      return;
    }
    emit(t);
  }

  // oracle -----------------------------------------------------------------
  OracleQuery query(const std::string& variant, int b, int n, int k, bool quotient, bool list,
                    std::uint64_t budget) {
    OracleQuery q;
    q.variant = parse_variant(variant);
    q.balls = b;
    q.period = n;
    q.k = k > 0 ? k : default_k(q.variant);
    q.cap = cap();
    q.list = list;
    q.quotient_colors = quotient;
    q.jobs = g_.jobs;
    q.budget = budget;
    return q;
  }

  void oracle(const OracleQuery& q, const std::string& through) {
    std::uint64_t count = 0;
    int used_cap = 0;
    bool stable = false;
    if (!through.empty()) {
      State s = parse_state(q.variant, through, q.k);
      OracleResult r = enumerate_prime_cycles_through(s, q.period, q.cap, false, q.jobs);
      count = r.count;
      used_cap = r.cap;
      stable = r.cap_stable;
    } else {
      const std::string key =
          fmt::format("{}:oracle:{}:{}:{}:{}:{}:{}", kCodeVersion, variant_name(q.variant), q.balls, q.period, q.k,
                      q.quotient_colors ? 1 : 0, q.cap.value_or(0));
      ResultCache& c = cache();
      std::optional<std::string> hit = c.get("oracle", key);
      unsigned long long cnt = 0;
      int stab = 0;
      if (hit && std::sscanf(hit->c_str(), "%llu:%d:%d", &cnt, &used_cap, &stab) == 3) {
        count = cnt;
        stable = stab != 0;
      } else {
        OracleResult r = enumerate_prime_cycles(q);
        count = r.count;
        used_cap = r.cap;
        stable = r.cap_stable;
        c.put("oracle", key, fmt::format("{}:{}:{}", count, used_cap, stable ? 1 : 0));
      }
    }
    if (!stable) err_ << fmt::format("warning: count at cap {} is not certified stable\n", used_cap);
    if (format() == Format::plain) {
      out_ << count << '\n';
      return;
    }
    emit({{"variant", "b", "n", "k", "quotient", "count", "cap", "cap_stable"},
          {{std::string(variant_name(q.variant)), std::to_string(q.balls), std::to_string(q.period),
            std::to_string(q.k), yes(q.quotient_colors), std::to_string(count), std::to_string(used_cap),
            yes(stable)}}});
  }

  void enumerate(const OracleQuery& q) {
    OracleResult r = enumerate_prime_cycles(q);
    if (format() == Format::plain) {
      for (const Cycle& c : r.cycles) out_ << listing_record(q.variant, q.balls, c) << '\n';
      return;
    }
    Table t{{"index", "record"}, {}};
    for (size_t i = 0; i < r.cycles.size(); ++i)
      t.rows.push_back({std::to_string(i + 1), listing_record(q.variant, q.balls, r.cycles[i])});
    emit(t);
  }

  // verify -----------------------------------------------------------------
  bool verify(const std::string& variant, int n, std::optional<int> to, int b, int k) {
    bool all = true;
    Table t{{"variant", "n", "b", "k", "formula", "oracle", "agree"}, {}};
    for (int m = n; m <= to.value_or(n); ++m) {
      CountReport r = verify_count(variant, m, b, k, g_.jobs);
      all = all && r.agree;
      if (format() == Format::json) {
        out_ << r.to_json() << '\n';
      } else if (format() == Format::plain) {
        out_ << fmt::format("{}formula {}, oracle {}, {}\n", to ? fmt::format("n={}: ", m) : "", r.formula,
                            r.oracle.value_or("-"), r.agree ? "AGREE" : "DISAGREE");
      } else {
        auto p = [&](const char* key) {
          auto it = r.params.find(key);
          return it == r.params.end() ? std::string() : std::to_string(it->second);
        };
        t.rows.push_back({variant, std::to_string(m), p("b"), p("k"), r.formula, r.oracle.value_or(""), yes(r.agree)});
      }
    }
    if (format() == Format::csv) emit(t);
    return all;
  }

  // table ------------------------------------------------------------------
  void table_mpx(int from, int to) {
    cache();
    Table t{{"n", "multiplex"}, {}};
    for (int n = from; n <= to; ++n) t.rows.push_back({std::to_string(n), to_string(count_multiplex_prime_2(n))});
    // the table is CSV unless JSON is asked for
    pjl::emit(t, format() == Format::json ? Format::json : Format::csv, out_);
  }

  void table_gamma_b(int from, int to) {
    const int d = digits(4);
    Table t{{"b", "1/b", "gamma_b"}, {}};
    for (int b = from; b <= to; ++b) {
      GammaSpec spec;
      spec.weight = Weight::gamma_b;
      spec.b = b;
      spec.digits = std::max(d, 10);
      t.rows.push_back({std::to_string(b), to_decimal(Rational(1, b), d), to_decimal(gamma(spec).partial, d)});
    }
    pjl::emit(t, format() == Format::json ? Format::json : Format::csv, out_);
  }

  bool table_ct(int t_max, int n_max) {
    CtBoundReport rep = verify_ct_bounds(t_max, n_max, digits(50));
    const int d = 6;
    Table t{{"t", "n", "c", "upper", "lower_lo", "lower_hi", "upper_holds", "lower_certified"}, {}};
    for (const auto& row : rep.rows)
      t.rows.push_back({std::to_string(row.t), std::to_string(row.n), to_string(row.c), to_decimal(row.upper, d),
                        to_decimal(row.lower.lo, d), to_decimal(row.lower.hi, d), yes(row.upper_holds),
                        yes(row.lower_certified)});
    pjl::emit(t, format() == Format::json ? Format::json : Format::csv, out_);
    err_ << fmt::format("violations {}, uncertified {}\n", rep.violations, rep.uncertified);
    return rep.violations == 0;
  }

  void table_conjecture(int k, int to) {
    const int d = digits(6);
    Table t{{"n", "k", "ratio"}, {}};
    for (const auto& [n, ratio] : passing_growth_ratios(k, to, g_.jobs))
      t.rows.push_back({std::to_string(n), std::to_string(k), to_decimal(ratio, d)});
    pjl::emit(t, format() == Format::json ? Format::json : Format::csv, out_);
  }

  // asymptotics --------------------------------------------------------------
  void gamma_cmd(const std::string& weight, int terms, int k, int b) {
    GammaSpec spec;
    spec.weight = parse_weight(weight);
    spec.terms = terms;
    spec.k = k;
    spec.b = b;
    const int d = digits(12);
    spec.digits = std::max(d, 10);
    GammaResult r = gamma(spec);
    std::string value = to_decimal(r.partial, d);
    if (format() == Format::plain) {
      out_ << value << '\n';
      return;
    }
    emit({{"weight", "terms", "value", "tail_estimate"},
          {{weight_name(spec.weight), std::to_string(r.terms_used), value, fmt::format("{:.3e}", r.tail_estimate)}}});
  }

  void q_cmd(int t) {
    Rational v = q(t);
    emit({{"t", "q", "decimal"}, {{std::to_string(t), to_string(v), to_decimal(v, digits(12))}}});
  }

  void r_cmd(int t) {
    const int d = digits(20);
    Interval v = r(t, d);
    emit({{"t", "lo", "hi"}, {{std::to_string(t), to_decimal(v.lo, d + 2), to_decimal(v.hi, d + 2)}}});
  }

  void limits_cmd(const std::string& weight, int n_max, int terms) {
    LimitTrace tr = empirical_limits(parse_weight(weight), n_max, terms);
    const int d = digits(6);
    Table t{{"n", "f_ratio", "s_ratio", "conv_ratio"}, {}};
    for (const auto& row : tr.rows)
      t.rows.push_back({std::to_string(row.n), to_decimal(row.f_ratio, d), to_decimal(row.s_ratio, d),
                        to_decimal(row.conv_ratio, d)});
    err_ << fmt::format("gamma_{} = {}\n", weight_name(tr.weight), to_decimal(tr.gamma, d));
    emit(t);
  }

  // ferrers ------------------------------------------------------------------
  std::vector<Partition> partitions_for(const std::string& partition, int n) {
    if (!partition.empty()) return {parse_int_list(partition)};
    if (n < 1) throw std::invalid_argument("give --partition or -n");
    std::vector<Partition> out;
    for (int t = 1; t <= max_parts(n); ++t)
      for (auto& p : distinct_partitions(n, t)) out.push_back(std::move(p));
    return out;
  }

  void diagrams(const std::string& partition, int n, int b, bool list) {
    Table t{{"partition", "enumerated", "column_product", "display"}, {}};
    for (const Partition& p : partitions_for(partition, n)) {
      auto ds = enumerate_filled_diagrams(p, b);
      if (list) {
        for (const auto& d : ds) {
          std::string s;
          for (size_t i = 0; i < d.rows.size(); ++i) s += (i ? "/" : "") + join_ints(d.rows[i], "");
          out_ << s << '\n';
        }
        continue;
      }
      t.rows.push_back({join_ints(p), std::to_string(ds.size()), to_string(count_filled_diagrams(p, b)),
                        to_string(diagram_count_display(p, b))});
    }
    if (!list) emit(t);
  }

  void word(const std::string& text, int b, BumpStart start) {
    std::vector<int> w = parse_int_list(text);
    std::vector<int> u = cards_of_landing_word(w, b, start);
    std::vector<Card> cards;
    for (int x : u) cards.push_back(Card::c(x));
    Cycle c = pattern_of_landing_word(w, b, start);
    emit({{"cards", "states", "prime"}, {{format_cards(cards), join_states(c), yes(is_prime(c))}}});
  }

  void family(int b, int n, BumpStart start, bool list) {
    FamilyReport r = generate_family(b, n, start);
    if (list) {
      for (const Cycle& c : r.cycles) out_ << listing_record(Variant::normal, b, c) << '\n';
      return;
    }
    emit({{"b", "n", "diagrams", "words", "cyclic_inputs", "malformed", "invalid", "nonprime", "landing_mismatch",
           "collisions", "distinct", "bound"},
          {{std::to_string(b), std::to_string(n), std::to_string(r.diagrams), std::to_string(r.word_count),
            std::to_string(r.cyclic_inputs), std::to_string(r.malformed), std::to_string(r.invalid),
            std::to_string(r.nonprime), std::to_string(r.landing_mismatch), std::to_string(r.collisions),
            std::to_string(r.distinct), to_string(r.bound)}}});
  }

  // infinite -----------------------------------------------------------------
  void fr_cmd(const std::string& s) { emit({{"state", "fr"}, {{format_abbrev(parse_abbrev(s)), format_abbrev(fr(parse_abbrev(s)))}}}); }

  void succ_cmd(const std::string& s, int window) {
    Table t{{"successor"}, {}};
    for (const auto& x : successors_inf(parse_abbrev(s), window)) t.rows.push_back({format_abbrev(x)});
    emit(t);
  }

  void realize_cmd(const std::string& s, int b) {
    emit({{"state", "realized"}, {{format_abbrev(parse_abbrev(s)), format_state(realize(parse_abbrev(s), b))}}});
  }

  void walks_cmd(const std::string& s, int length, int window) {
    AbbrevState a = parse_abbrev(s);
    WalkCounts w = count_walks_through(a, length, window);
    WalkCounts f = count_walks_through(fr(a), length, window);
    emit({{"state", "fr", "walks", "fr_walks", "visits", "fr_visits"},
          {{format_abbrev(a), format_abbrev(fr(a)), to_string(w.walks), to_string(f.walks), to_string(w.visits),
            to_string(f.visits)}}});
  }

  bool check_cmd(int max_len, int window, int state_len, int walk, bool multiplicity) {
    Table t{{"check", "checked", "violations"}, {}};
    long long bad = 0;
    auto add = [&](const char* name, InfiniteCheck c) {
      bad += c.violations;
      t.rows.push_back({name, std::to_string(c.checked), std::to_string(c.violations)});
    };
    add("fr_involution", check_fr_involution(max_len));
    add("transition_reversal", check_transition_reversal(window));
    add("single_flip", check_single_flip(window));
    add(multiplicity ? "walk_visits" : "walks", check_walk_bijection(state_len, walk, window, multiplicity));
    emit(t);
    return bad == 0;
  }

 private:
  static void require_b(const std::string& variant, int b, int want) {
    if (b != want) throw std::invalid_argument(fmt::format("'{}' has a closed form only for b = {}", variant, want));
  }

  Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<ResultCache> cache_;
};

BumpStart parse_bump(const std::string& s) {
  if (s == "preceding") return BumpStart::preceding_beat;
  if (s == "landing") return BumpStart::landing_beat;
  throw std::invalid_argument(fmt::format("unknown bump start '{}'", s));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime juggling pattern counts, constructions and checks", "pjl"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default $PJL_CACHE_DIR)");
  app.add_option("--cap", g.cap, "Oracle state-length cap (0: sweep until stable)")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", g.precision, "Decimal digits in printed values")->check(CLI::Range(0, 2000));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);

  std::string variant, state_text, partition, word_text, weight = "one", bump = "preceding";
  int n = 0, from = 1, t_arg = 1, window = 8, length = 0;
  // shared across subcommands; defaults are applied per subcommand below
  std::optional<int> b, k, terms, to;
  bool quotient = false, list = false, multiplicity = false;
  std::uint64_t budget = 0;
  int max_len = 14, state_len = 6, walk = 5, t_max = 5, n_max = 30;

  const std::string variants = "normal|multiplex|colored|passing";

  auto* count = app.add_subcommand("count", "Closed-form counts");
  count->add_option("variant", variant,
                    "normal | multiplex | strict | colored | passing | base | bound-b | bound-passing-exact | "
                    "bound-passing-closed | bound-passing-conservative")
      ->required();
  count->add_option("-n", n, "Period")->required()->check(CLI::PositiveNumber);
  count->add_option("-b", b, "Balls");
  count->add_option("-k", k, "Hands (passing)");
  count->add_option("--to", to, "Last period of a range starting at -n");

  auto* oracle = app.add_subcommand("oracle", "Brute-force count of prime cycles");
  auto* enumerate = app.add_subcommand("enumerate", "List prime cycles");
  for (auto* sub : {oracle, enumerate}) {
    sub->add_option("variant", variant, variants)->required();
    sub->add_option("-n", n, "Period")->required()->check(CLI::PositiveNumber);
    sub->add_option("-b", b, "Balls");
    sub->add_option("-k", k, "Multiplex capacity, colors or hands");
    sub->add_flag("--quotient-colors", quotient, "Count colorings up to relabeling");
    sub->add_option("--budget", budget, "DFS node budget per cap");
  }
  oracle->add_option("--through", state_text, "Only cycles through this state");

  auto* verify = app.add_subcommand("verify", "Formula against oracle");
  verify->add_option("variant", variant,
                     "normal | multiplex | strict | colored | passing1 | base | bound-b | bound-passing-exact | "
                     "bound-passing-closed")
      ->required();
  verify->add_option("-n", n, "Period")->required()->check(CLI::PositiveNumber);
  verify->add_option("--to", to, "Last period of a range starting at -n");
  verify->add_option("-b", b, "Balls (bound-b)");
  verify->add_option("-k", k, "Hands (passing)");

  auto* table = app.add_subcommand("table", "Published tables and traces");
  table->require_subcommand(1);
  auto* t_mpx = table->add_subcommand("mpx", "M'(n,2) table");
  t_mpx->add_option("--from", from);
  t_mpx->add_option("--to", to);
  auto* t_gamma = table->add_subcommand("gamma-b", "1/b against gamma_b");
  int gfrom = 3, gto = 7;
  t_gamma->add_option("--from", gfrom);
  t_gamma->add_option("--to", gto);
  auto* t_ct = table->add_subcommand("ct", "c_t(n) against its upper and lower bounds");
  t_ct->add_option("--t-max", t_max);
  t_ct->add_option("--n-max", n_max);
  auto* t_conj = table->add_subcommand("conjecture", "P'(2,n,k) / (1+k)^n growth trace");
  t_conj->add_option("-k", k);
  t_conj->add_option("--to", to);

  auto* asym = app.add_subcommand("asymptotics", "Series constants and bound checks");
  asym->require_subcommand(1);
  auto* a_gamma = asym->add_subcommand("gamma", "Partial sum of a weighted series");
  a_gamma->add_option("--weight", weight, "one|t|t+1|colored|k^t|t*k^t|t/2^t|t/2^(t+1)|base|passing|gamma-b or N|M|C|B|P");
  a_gamma->add_option("--terms", terms);
  a_gamma->add_option("-k", k);
  a_gamma->add_option("-b", b);
  auto* a_q = asym->add_subcommand("q", "Exact q_t");
  a_q->add_option("-t", t_arg)->required()->check(CLI::PositiveNumber);
  auto* a_r = asym->add_subcommand("r", "Enclosure of r_t");
  a_r->add_option("-t", t_arg)->required()->check(CLI::PositiveNumber);
  auto* a_bounds = asym->add_subcommand("bounds", "Check both c_t(n) bounds");
  a_bounds->add_option("--t-max", t_max);
  a_bounds->add_option("--n-max", n_max);
  auto* a_limits = asym->add_subcommand("limits", "F, S and convolution ratios");
  a_limits->add_option("--weight", weight, "one or t");
  a_limits->add_option("--n-max", n_max);
  a_limits->add_option("--terms", terms);

  auto* ferrers = app.add_subcommand("ferrers", "Filled diagrams and the b-ball family");
  ferrers->require_subcommand(1);
  auto* f_diag = ferrers->add_subcommand("diagrams", "List filled diagrams");
  auto* f_count = ferrers->add_subcommand("count", "Diagram counts per partition");
  for (auto* sub : {f_diag, f_count}) {
    sub->add_option("--partition", partition, "Distinct parts, e.g. 3,1");
    sub->add_option("-n", n, "All distinct partitions of n");
    sub->add_option("-b", b);
  }
  f_diag->add_flag("--list", list);
  auto* f_word = ferrers->add_subcommand("word", "Cards and states of a landing word");
  f_word->add_option("word", word_text, "Landing word, e.g. 1,3,0")->required();
  f_word->add_option("-b", b);
  f_word->add_option("--bump", bump, "preceding | landing");
  auto* f_family = ferrers->add_subcommand("family", "Generate the pattern family");
  f_family->add_option("-b", b);
  f_family->add_option("-n", n)->required()->check(CLI::PositiveNumber);
  f_family->add_option("--bump", bump, "preceding | landing");
  f_family->add_flag("--list", list);

  auto* inf = app.add_subcommand("infinite", "The infinite state graph");
  inf->require_subcommand(1);
  auto* i_fr = inf->add_subcommand("fr", "Flip-reverse a state");
  i_fr->add_option("state", state_text)->required();
  auto* i_succ = inf->add_subcommand("succ", "Successors within a window");
  i_succ->add_option("state", state_text)->required();
  i_succ->add_option("--window", window);
  auto* i_real = inf->add_subcommand("realize", "Embed as a b-ball state");
  i_real->add_option("state", state_text)->required();
  i_real->add_option("-b", b)->required();
  auto* i_walks = inf->add_subcommand("walks", "Walks through a state and its flip");
  i_walks->add_option("state", state_text)->required();
  i_walks->add_option("--length", length)->required();
  i_walks->add_option("--window", window);
  auto* i_check = inf->add_subcommand("check", "Exhaustive property checks");
  i_check->add_option("--max-len", max_len);
  i_check->add_option("--window", window);
  i_check->add_option("--state-len", state_len);
  i_check->add_option("--walk", walk);
  i_check->add_flag("--multiplicity", multiplicity);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner run(g, out, err);
  set_oracle_progress([&err](const std::string& msg) { err << msg << '\n'; });
  int code = 0;
  try {
    if (*count) {
      run.count(variant, n, b.value_or(0), k.value_or(2), to);
    } else if (*oracle || *enumerate) {
      OracleQuery q = run.query(variant, b.value_or(2), n, k.value_or(0), quotient, enumerate->parsed(), budget);
      if (*oracle)
        run.oracle(q, state_text);
      else
        run.enumerate(q);
    } else if (*verify) {
      code = run.verify(variant, n, to, b.value_or(3), k.value_or(2)) ? 0 : 1;
    } else if (*t_mpx) {
      run.table_mpx(from, to.value_or(30));
    } else if (*t_gamma) {
      run.table_gamma_b(gfrom, gto);
    } else if (*t_ct) {
      code = run.table_ct(t_max, n_max) ? 0 : 1;
    } else if (*t_conj) {
      run.table_conjecture(k.value_or(2), to.value_or(5));
    } else if (*a_gamma) {
      run.gamma_cmd(weight, terms.value_or(12), k.value_or(2), b.value_or(3));
    } else if (*a_q) {
      run.q_cmd(t_arg);
    } else if (*a_r) {
      run.r_cmd(t_arg);
    } else if (*a_bounds) {
      CtBoundReport rep = verify_ct_bounds(t_max, n_max, g.precision.value_or(50));
      out << fmt::format("rows {}, violations {}, uncertified {}\n", rep.rows.size(), rep.violations, rep.uncertified);
      code = rep.violations == 0 && rep.uncertified == 0 ? 0 : 1;
    } else if (*a_limits) {
      run.limits_cmd(weight, n_max, terms.value_or(20));
    } else if (*f_diag || *f_count) {
      run.diagrams(partition, n, b.value_or(3), f_diag->parsed() && list);
    } else if (*f_word) {
      run.word(word_text, b.value_or(3), parse_bump(bump));
    } else if (*f_family) {
      run.family(b.value_or(3), n, parse_bump(bump), list);
    } else if (*i_fr) {
      run.fr_cmd(state_text);
    } else if (*i_succ) {
      run.succ_cmd(state_text, window);
    } else if (*i_real) {
      run.realize_cmd(state_text, *b);
    } else if (*i_walks) {
      run.walks_cmd(state_text, length, window);
    } else if (*i_check) {
      code = run.check_cmd(max_len, window, state_len, walk, multiplicity) ? 0 : 1;
    }
    run.finish();
  } catch (const BudgetExceeded& e) {
    err << fmt::format("error: {} (partial count {} at cap {})\n", e.what(), e.partial(), e.cap());
    code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  }
  set_oracle_progress(nullptr);
  return code;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace pjl

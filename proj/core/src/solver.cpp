#include "liargame/solver.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "liargame/weights.hpp"

namespace liargame {

const Query& SolveResult::principal() const {
  if (optimal_queries.empty())
    throw std::logic_error("principal(): terminal state has no queries");
  return optimal_queries.front();
}

// --- MemoCache ---------------------------------------------------------

MemoCache::MemoCache(int lies, std::int64_t cap) : lies_(lies), cap_(cap) {
  if (lies < 0 || cap < 1)
    throw std::invalid_argument("cache: bad (lies, cap) key");
}

std::size_t MemoCache::VectorHash::operator()(
    const std::vector<std::int64_t>& v) const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (auto x : v) {
    h ^= std::uint64_t(x);
    h *= 1099511628211ull;
    h ^= h >> 32;
  }
  return std::size_t(h);
}

std::optional<int> MemoCache::find(const std::vector<std::int64_t>& counts) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find(counts);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void MemoCache::insert(const std::vector<std::int64_t>& counts, int value) {
  std::lock_guard lock(mutex_);
  values_.emplace(counts, value);  // keep the first value; duplicates agree
}

std::size_t MemoCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

std::vector<std::pair<std::vector<std::int64_t>, int>> MemoCache::entries_sorted()
    const {
  std::vector<std::pair<std::vector<std::int64_t>, int>> out;
  {
    std::lock_guard lock(mutex_);
    out.assign(values_.begin(), values_.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void MemoCache::write(std::ostream& out) const {
  out << kFormatTag << " l=" << lies_ << " k=" << cap_ << '\n';
  for (const auto& [counts, value] : entries_sorted())
    out << format_counts(counts) << '=' << value << '\n';
}

std::shared_ptr<MemoCache> MemoCache::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw parse_error("cache: missing header line");
  int lies = -1;
  long long cap = -1;
  {
    const std::string tag = kFormatTag;
    if (line.rfind(tag + " l=", 0) != 0)
      throw parse_error("cache: unrecognized header '" + line + "'");
    int consumed = -1;
    if (std::sscanf(line.c_str() + tag.size(), " l=%d k=%lld%n", &lies, &cap,
                    &consumed) != 2 ||
        tag.size() + std::size_t(consumed) != line.size())
      throw parse_error("cache: malformed header '" + line + "'");
  }
  if (lies < 0 || cap < 1)
    throw parse_error("cache: header has invalid parameters");

  auto cache = std::make_shared<MemoCache>(lies, cap);
  std::vector<std::int64_t> prev;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error("cache line " + std::to_string(line_no) + ": missing '='");
    std::vector<std::int64_t> counts;
    try {
      counts = parse_counts(std::string_view(line).substr(0, eq));
    } catch (const parse_error& e) {
      throw parse_error("cache line " + std::to_string(line_no) + ": " + e.what());
    }
    if (counts.size() != std::size_t(lies) + 1)
      throw parse_error("cache line " + std::to_string(line_no) +
                        ": state has wrong component count for l=" +
                        std::to_string(lies));
    int value = 0;
    const char* first = line.c_str() + eq + 1;
    const char* last = line.c_str() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 0)
      throw parse_error("cache line " + std::to_string(line_no) + ": bad value");
    if (!prev.empty() && !(prev < counts))
      throw parse_error("cache line " + std::to_string(line_no) +
                        ": entries not in ascending order");
    prev = counts;
    cache->insert(counts, value);
  }
  return cache;
}

// --- Solver ------------------------------------------------------------

Solver::Solver(SolverOptions options, SolverLimits limits)
    : options_(options), limits_(limits) {}

std::shared_ptr<MemoCache> Solver::cache(const Params& params) {
  validate(params);
  std::lock_guard lock(shards_mutex_);
  auto& slot = shards_[{params.lies, params.cap}];
  if (!slot) slot = std::make_shared<MemoCache>(params.lies, params.cap);
  return slot;
}

void Solver::adopt_cache(std::shared_ptr<MemoCache> shard) {
  if (!shard) throw std::invalid_argument("adopt_cache: null shard");
  std::lock_guard lock(shards_mutex_);
  shards_[{shard->lies(), shard->cap()}] = std::move(shard);
}

void Solver::check_input(const GameState& state, const Params& params) const {
  validate(params);
  if (state.counts.size() != std::size_t(params.lies) + 1)
    throw std::invalid_argument("solve: state has " +
                                std::to_string(state.counts.size()) +
                                " components, params expect " +
                                std::to_string(params.lies + 1));
  for (auto c : state.counts)
    if (c < 0) throw std::invalid_argument("solve: negative component count");
  if (params.lies > limits_.max_lies)
    throw budget_error("solve: lies " + std::to_string(params.lies) +
                       " exceeds limit " + std::to_string(limits_.max_lies));
  if (state.total() > limits_.max_total)
    throw budget_error("solve: state total " + std::to_string(state.total()) +
                       " exceeds limit " + std::to_string(limits_.max_total));
}

int Solver::value(const GameState& state, const Params& params) {
  check_input(state, params);
  auto shard = cache(params);
  return value_rec(*shard, params, state.counts);
}

int Solver::value_basic(const GameState& state, int lies) {
  const std::int64_t total = state.total();
  return value(state, Params{lies, std::max<std::int64_t>(total, 1)});
}

int Solver::value_rec(MemoCache& cache, const Params& params,
                      const std::vector<std::int64_t>& counts) {
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (total <= 1) return 0;

  if (auto hit = cache.find(counts)) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    return *hit;
  }
  if (cache.size() >= limits_.max_cached_states)
    throw budget_error("solve: cache exceeds " +
                       std::to_string(limits_.max_cached_states) + " states");

  const GameState state{counts, 0};
  std::vector<Query> menu;
  if (options_.convexity_normalize && counts[0] / 2 >= params.cap) {
    // With x0 >= 2*cap the block question (cap, 0, ..., 0) is optimal.
    std::vector<std::int64_t> asks(counts.size(), 0);
    asks[0] = params.cap;
    menu.push_back(Query{std::move(asks)});
  } else {
    menu = enumerate_queries(state, params);
  }

  int lower = 0;
  if (options_.weight_cutoff || options_.balanced_order)
    lower = state_weight_bound(state);

  if (options_.balanced_order && menu.size() > 1) {
    // Adversary keeps the heavier child; prefer queries that balance the
    // split. Stable sort keeps lexicographic order among ties.
    const auto ref = std::int64_t(std::max(lower - 1, 0));
    const auto row = binom_le_row(ref, params.lies);
    std::vector<std::pair<BigUint, std::size_t>> keyed;
    keyed.reserve(menu.size());
    for (std::size_t i = 0; i < menu.size(); ++i) {
      BigUint wy = state_weight_with_row(
          apply_answer(state, menu[i], Answer::yes).counts, row);
      BigUint wn = state_weight_with_row(
          apply_answer(state, menu[i], Answer::no).counts, row);
      keyed.emplace_back(std::max(wy, wn), i);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    std::vector<Query> ordered;
    ordered.reserve(menu.size());
    for (const auto& [w, i] : keyed) ordered.push_back(std::move(menu[i]));
    menu = std::move(ordered);
  }

  int best = std::numeric_limits<int>::max();
  for (const Query& q : menu) {
    if (options_.weight_cutoff && best <= lower) break;
    const GameState no_child = apply_answer(state, q, Answer::no);
    const int v_no = value_rec(cache, params, no_child.counts);
    if (options_.alpha_cutoff && best <= 1 + v_no) continue;
    const GameState yes_child = apply_answer(state, q, Answer::yes);
    const int v_yes = value_rec(cache, params, yes_child.counts);
    best = std::min(best, 1 + std::max(v_no, v_yes));
  }

  cache.insert(counts, best);
  computed_.fetch_add(1, std::memory_order_relaxed);
  return best;
}

SolveResult Solver::solve(const GameState& state, const Params& params) {
  SolveResult result;
  result.value = value(state, params);
  if (state.terminal()) return result;
  // Second pass over the full menu with cached child values; pruning during
  // value() cannot hide ties here.
  auto shard = cache(params);
  for (const Query& q : enumerate_queries(state, params)) {
    const int v_no = value_rec(*shard, params,
                               apply_answer(state, q, Answer::no).counts);
    const int v_yes = value_rec(*shard, params,
                                apply_answer(state, q, Answer::yes).counts);
    if (1 + std::max(v_no, v_yes) == result.value)
      result.optimal_queries.push_back(q);
  }
  return result;
}

SolveResult Solver::solve_basic(const GameState& state, int lies) {
  const std::int64_t total = state.total();
  return solve(state, Params{lies, std::max<std::int64_t>(total, 1)});
}

// --- Brute-force oracle -------------------------------------------------

namespace {

constexpr int kOracleMaxComponents = 8;
using OracleCounts = std::array<std::int64_t, kOracleMaxComponents>;

// Plain bounded-depth win search straight from the definition; evaluates the
// NO child first only because it usually fails faster.
bool oracle_can_win(const OracleCounts& x, int ncomp, std::int64_t cap, int depth) {
  std::int64_t total = 0;
  for (int i = 0; i < ncomp; ++i) total += x[i];
  if (total <= 1) return true;
  if (depth == 0) return false;

  const std::int64_t budget = std::min<std::int64_t>(cap, total - 1);
  OracleCounts q{};
  auto try_queries = [&](auto&& self, int i, std::int64_t used) -> bool {
    if (i == ncomp) {
      if (used == 0) return false;
      OracleCounts no{};
      no[0] = x[0] - q[0];
      for (int t = 1; t < ncomp; ++t) no[t] = (x[t] - q[t]) + q[t - 1];
      if (!oracle_can_win(no, ncomp, cap, depth - 1)) return false;
      OracleCounts yes{};
      yes[0] = q[0];
      for (int t = 1; t < ncomp; ++t) yes[t] = q[t] + (x[t - 1] - q[t - 1]);
      return oracle_can_win(yes, ncomp, cap, depth - 1);
    }
    const std::int64_t limit = std::min(x[std::size_t(i)], budget - used);
    for (std::int64_t v = 0; v <= limit; ++v) {
      q[std::size_t(i)] = v;
      if (self(self, i + 1, used + v)) return true;
    }
    q[std::size_t(i)] = 0;
    return false;
  };
  return try_queries(try_queries, 0, 0);
}

}  // namespace

std::optional<int> brute_force_oracle(const GameState& state, const Params& params,
                                      int depth_limit, const OracleBudget& budget) {
  validate(params);
  if (state.counts.size() != std::size_t(params.lies) + 1)
    throw std::invalid_argument("oracle: state does not match params");
  if (params.lies > budget.max_lies || state.total() > budget.max_total ||
      params.cap > std::max(budget.max_cap, state.total()))
    throw budget_error("oracle: instance outside the tiny-instance budget");
  if (params.lies + 1 > kOracleMaxComponents)
    throw budget_error("oracle: too many components");

  OracleCounts x{};
  for (std::size_t i = 0; i < state.counts.size(); ++i) x[i] = state.counts[i];
  const int ncomp = params.lies + 1;
  for (int d = 0; d <= depth_limit; ++d)
    if (oracle_can_win(x, ncomp, params.cap, d)) return d;
  return std::nullopt;
}

// --- Strategy extraction ------------------------------------------------

namespace {

StrategyNode extract_rec(Solver& solver, const GameState& state,
                         const Params& params, std::size_t max_nodes,
                         std::size_t& used) {
  if (++used > max_nodes)
    throw budget_error("extract_strategy: tree exceeds " +
                       std::to_string(max_nodes) + " nodes");
  StrategyNode node;
  node.state = state;
  if (state.terminal()) return node;
  SolveResult r = solver.solve(state, params);
  node.query = r.principal();
  node.on_yes = std::make_unique<StrategyNode>(extract_rec(
      solver, apply_answer(state, *node.query, Answer::yes), params, max_nodes, used));
  node.on_no = std::make_unique<StrategyNode>(extract_rec(
      solver, apply_answer(state, *node.query, Answer::no), params, max_nodes, used));
  return node;
}

}  // namespace

int strategy_depth(const StrategyNode& node) {
  if (!node.query) return 0;
  return 1 + std::max(strategy_depth(*node.on_yes), strategy_depth(*node.on_no));
}

StrategyNode extract_strategy(Solver& solver, const GameState& state,
                              const Params& params, std::size_t max_nodes) {
  std::size_t used = 0;
  return extract_rec(solver, state, params, max_nodes, used);
}

}  // namespace liargame

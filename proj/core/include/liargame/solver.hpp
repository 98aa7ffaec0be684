#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "liargame/game.hpp"

namespace liargame {

// Every layer is individually switchable so audits can compare against the
// plain minimax. None of them may change computed values; tests assert that.
struct SolverOptions {
  // Abandon a query as soon as one child already matches the best known line.
  bool alpha_cutoff = true;
  // Stop scanning queries once the best line meets the weight lower bound.
  bool weight_cutoff = true;
  // Try weight-balanced queries first; they tend to be optimal.
  bool balanced_order = true;
  // Experimental: when the first component holds at least 2*cap candidates,
  // consider only the query asking cap of them. Value-preserving; kept off by
  // default so the full query menu is always what gets searched.
  bool convexity_normalize = false;
};

struct SolverLimits {
  std::int64_t max_total = 512;
  int max_lies = 6;
  std::size_t max_cached_states = 8'000'000;
};

struct SolveResult {
  int value = 0;
  // Every admissible query achieving value = 1 + max(children), ascending
  // lexicographic. Empty exactly for terminal states.
  std::vector<Query> optimal_queries;

  // Lexicographically smallest optimal query.
  const Query& principal() const;
};

// Exact values for one (lies, cap) family, keyed by the counts vector alone;
// the excluded count never enters. Concurrent readers and insert-if-absent
// writers are safe; racing duplicate computations insert identical values.
class MemoCache {
 public:
  MemoCache(int lies, std::int64_t cap);

  int lies() const { return lies_; }
  std::int64_t cap() const { return cap_; }

  std::optional<int> find(const std::vector<std::int64_t>& counts) const;
  void insert(const std::vector<std::int64_t>& counts, int value);
  std::size_t size() const;
  std::vector<std::pair<std::vector<std::int64_t>, int>> entries_sorted() const;

  // Line-oriented text format:
  //   liargame-cache v1 l=<lies> k=<cap>
  //   x0,...,xl=<value>        (one per entry, ascending lexicographic)
  void write(std::ostream& out) const;
  static std::shared_ptr<MemoCache> read(std::istream& in);  // throws parse_error

  static constexpr const char* kFormatTag = "liargame-cache v1";

 private:
  struct VectorHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const;
  };

  int lies_;
  std::int64_t cap_;
  mutable std::mutex mutex_;
  std::unordered_map<std::vector<std::int64_t>, int, VectorHash> values_;
};

// Exact adversarial minimax with memoization:
//   V(s) = 0 if at most one candidate remains, else
//   V(s) = 1 + min over admissible q of max(V(yes child), V(no child)).
// Reentrant; any number of threads may solve through one instance.
class Solver {
 public:
  explicit Solver(SolverOptions options = {}, SolverLimits limits = {});

  // Exact value. Throws budget_error when the configured limits would be
  // exceeded; never returns an approximation.
  int value(const GameState& state, const Params& params);

  // Value plus the complete set of optimal queries.
  SolveResult solve(const GameState& state, const Params& params);

  // Unrestricted game: cap equal to the live total, under which every
  // useful question is available.
  int value_basic(const GameState& state, int lies);
  SolveResult solve_basic(const GameState& state, int lies);

  // Shared cache shard for one parameter family (created on first use).
  std::shared_ptr<MemoCache> cache(const Params& params);
  // Adopt a previously persisted shard, replacing any existing one with the
  // same (lies, cap) key.
  void adopt_cache(std::shared_ptr<MemoCache> shard);

  std::uint64_t states_computed() const { return computed_.load(); }
  std::uint64_t cache_hits() const { return hits_.load(); }

  const SolverOptions& options() const { return options_; }
  const SolverLimits& limits() const { return limits_; }

 private:
  void check_input(const GameState& state, const Params& params) const;
  int value_rec(MemoCache& cache, const Params& params,
                const std::vector<std::int64_t>& counts);

  SolverOptions options_;
  SolverLimits limits_;
  mutable std::mutex shards_mutex_;
  std::map<std::pair<int, std::int64_t>, std::shared_ptr<MemoCache>> shards_;
  std::atomic<std::uint64_t> computed_{0};
  std::atomic<std::uint64_t> hits_{0};
};

// Independent ground truth for tiny instances: iterative-deepening win search
// over the raw game tree. No memoization, no pruning, no ordering heuristics;
// shares nothing with Solver beyond the transition rule. Returns nullopt when
// no win is found within depth_limit.
struct OracleBudget {
  std::int64_t max_total = 8;
  int max_lies = 2;
  std::int64_t max_cap = 4;
};
std::optional<int> brute_force_oracle(const GameState& state, const Params& params,
                                      int depth_limit = 40,
                                      const OracleBudget& budget = {});

// Decision tree of principal queries; YES/NO edges, terminal leaves. Depth
// equals the exact value of the root.
struct StrategyNode {
  GameState state;
  std::optional<Query> query;  // empty at leaves
  std::unique_ptr<StrategyNode> on_yes;
  std::unique_ptr<StrategyNode> on_no;
};
int strategy_depth(const StrategyNode& node);
StrategyNode extract_strategy(Solver& solver, const GameState& state,
                              const Params& params, std::size_t max_nodes = 1 << 20);

}  // namespace liargame

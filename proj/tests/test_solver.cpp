#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <future>
#include <limits>
#include <sstream>

#include "liargame/bounds.hpp"
#include "liargame/solver.hpp"
#include "liargame/weights.hpp"

using namespace liargame;

namespace {

GameState st(std::vector<std::int64_t> counts) { return make_state(std::move(counts)); }

void for_each_counts(int lies, std::int64_t max_total,
                     const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> counts(std::size_t(lies) + 1, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
    if (i == counts.size()) {
      fn(counts);
      return;
    }
    for (std::int64_t v = 0; used + v <= max_total; ++v) {
      counts[i] = v;
      self(self, i + 1, used + v);
    }
    counts[i] = 0;
  };
  rec(rec, 0, 0);
}

}  // namespace

TEST_CASE("known exact values") {
  Solver solver;
  // Unrestricted no-lie play is binary search.
  CHECK(solver.value(start_state(0, 8), Params{0, 8}) == 3);
  for (std::int64_t n = 1; n <= 64; ++n)
    CHECK(solver.value_basic(start_state(0, n), 0) == ceil_log2(n));
  // Frozen via the brute-force oracle below.
  CHECK(solver.value(st({1, 1}), Params{1, 2}) == 2);
  CHECK(solver.value_basic(st({2, 0}), 1) == 3);
}

TEST_CASE("published instance: (10,44) with one lie and cap 16") {
  Solver solver;
  const Params params{1, 16};
  const SolveResult r = solver.solve(st({10, 44}), params);
  CHECK(r.value == 7);
  CHECK(r.optimal_queries == std::vector<Query>{Query{{7, 9}}});
  CHECK(r.principal() == Query{{7, 9}});
}

TEST_CASE("oracle on tiny instances") {
  CHECK(brute_force_oracle(st({2}), Params{0, 1}) == 1);
  CHECK(brute_force_oracle(st({0, 2}), Params{1, 1}) == 1);
  CHECK(brute_force_oracle(st({1, 1}), Params{1, 2}) == 2);
  CHECK(brute_force_oracle(st({2, 0}), Params{1, 2}) == 3);
  // Depth limit reports overflow instead of an answer.
  CHECK(brute_force_oracle(st({4, 0}), Params{1, 2}, 2) == std::nullopt);
  // Outside the tiny-instance budget.
  CHECK_THROWS_AS(brute_force_oracle(start_state(1, 100), Params{1, 2}),
                  budget_error);
}

TEST_CASE("solver agrees with the oracle on a spot-check range") {
  // The exhaustive sweep lives in the acceptance suite; keep a fast slice here.
  Solver solver;
  for (int lies = 0; lies <= 2; ++lies) {
    for (std::int64_t cap = 1; cap <= 3; ++cap) {
      const Params params{lies, cap};
      for_each_counts(lies, 4, [&](const std::vector<std::int64_t>& counts) {
        const GameState state{counts, 0};
        const auto expected = brute_force_oracle(state, params);
        REQUIRE(expected.has_value());
        CHECK(solver.value(state, params) == *expected);
      });
    }
  }
}

TEST_CASE("pruning layers never change values") {
  std::vector<SolverOptions> variants;
  {
    SolverOptions o;  // everything on (default)
    variants.push_back(o);
    o.alpha_cutoff = false;
    variants.push_back(o);
    o.weight_cutoff = false;
    variants.push_back(o);
    o.balanced_order = false;
    variants.push_back(o);  // plain minimax
    SolverOptions normalized;
    normalized.convexity_normalize = true;
    variants.push_back(normalized);
  }
  std::deque<Solver> solvers;
  for (const auto& o : variants) solvers.emplace_back(o);

  for (int lies = 0; lies <= 2; ++lies) {
    for (std::int64_t cap = 1; cap <= 3; ++cap) {
      const Params params{lies, cap};
      for_each_counts(lies, 5, [&](const std::vector<std::int64_t>& counts) {
        const GameState state{counts, 0};
        const int reference = solvers[0].value(state, params);
        for (std::size_t i = 1; i < solvers.size(); ++i)
          CHECK(solvers[i].value(state, params) == reference);
      });
    }
  }
  // Larger spot checks with a big first block, where normalization actually
  // bites (the fresh 56-candidate game starts at x0 = 56 >= 2*16).
  const Params params{1, 3};
  CHECK(Solver(variants[4]).value(start_state(1, 14), params) ==
        Solver().value(start_state(1, 14), params));
  CHECK(Solver(variants[4]).value(start_state(1, 56), Params{1, 16}) ==
        Solver().value(start_state(1, 56), Params{1, 16}));
}

TEST_CASE("optimal query sets are exact and lexicographically led") {
  Solver solver;
  for (int lies = 0; lies <= 2; ++lies) {
    const Params params{lies, 3};
    for_each_counts(lies, 5, [&](const std::vector<std::int64_t>& counts) {
      const GameState state{counts, 0};
      const SolveResult r = solver.solve(state, params);
      if (state.terminal()) {
        CHECK(r.value == 0);
        CHECK(r.optimal_queries.empty());
        return;
      }
      REQUIRE_FALSE(r.optimal_queries.empty());
      CHECK(r.principal() == r.optimal_queries.front());
      int best_seen = std::numeric_limits<int>::max();
      for (const Query& q : enumerate_queries(state, params)) {
        const int val =
            1 + std::max(solver.value(apply_answer(state, q, Answer::yes), params),
                         solver.value(apply_answer(state, q, Answer::no), params));
        best_seen = std::min(best_seen, val);
        const bool listed = std::find(r.optimal_queries.begin(),
                                      r.optimal_queries.end(),
                                      q) != r.optimal_queries.end();
        CHECK(listed == (val == r.value));
      }
      CHECK(best_seen == r.value);
    });
  }
}

TEST_CASE("value ignores the excluded count") {
  Solver solver;
  const Params params{1, 2};
  CHECK(solver.value(GameState{{3, 2}, 0}, params) ==
        solver.value(GameState{{3, 2}, 17}, params));
}

TEST_CASE("weight bound never exceeds the exact value") {
  Solver solver;
  for (int lies = 0; lies <= 2; ++lies) {
    for (std::int64_t cap = 1; cap <= 3; ++cap) {
      const Params params{lies, cap};
      for_each_counts(lies, 6, [&](const std::vector<std::int64_t>& counts) {
        const GameState state{counts, 0};
        if (state.total() < 1) return;
        CHECK(solver.value(state, params) >= state_weight_bound(state));
      });
    }
  }
}

TEST_CASE("wider caps never hurt") {
  Solver solver;
  for (int lies = 0; lies <= 2; ++lies) {
    for_each_counts(lies, 6, [&](const std::vector<std::int64_t>& counts) {
      const GameState state{counts, 0};
      int previous = -1;
      for (std::int64_t cap = 1; cap <= 4; ++cap) {
        const int v = solver.value(state, Params{lies, cap});
        if (cap > 1) CHECK(v <= previous);
        previous = v;
      }
    });
  }
}

TEST_CASE("relaxing an element never increases the value") {
  Solver solver;
  for (int lies = 0; lies <= 2; ++lies) {
    const Params params{lies, 2};
    for_each_counts(lies, 6, [&](const std::vector<std::int64_t>& counts) {
      const GameState state{counts, 0};
      const int base = solver.value(state, params);
      for (int from = 0; from <= lies; ++from) {
        if (counts[std::size_t(from)] < 1) continue;
        for (int to = from + 1; to <= lies + 1; ++to)
          CHECK(solver.value(relax_element(state, from, to), params) <= base);
      }
    });
  }
}

TEST_CASE("budget limits surface as errors, not wrong answers") {
  Solver tight(SolverOptions{}, SolverLimits{.max_total = 10, .max_lies = 1,
                                             .max_cached_states = 1000});
  CHECK_THROWS_AS(tight.value(start_state(1, 11), Params{1, 2}), budget_error);
  CHECK_THROWS_AS(tight.value(start_state(2, 4), Params{2, 2}), budget_error);
  Solver tiny_cache(SolverOptions{}, SolverLimits{.max_total = 64, .max_lies = 2,
                                                  .max_cached_states = 3});
  CHECK_THROWS_AS(tiny_cache.value(start_state(1, 20), Params{1, 3}), budget_error);
}

TEST_CASE("memo audit: cold re-solve reproduces every cached entry") {
  Solver warm;
  const Params params{1, 16};
  warm.solve(st({10, 44}), params);
  const auto entries = warm.cache(params)->entries_sorted();
  CHECK(entries.size() > 100);

  Solver cold;
  for (const auto& [counts, value] : entries)
    CHECK(cold.value(GameState{counts, 0}, params) == value);

  // Warm resolve touches nothing new.
  const auto before = warm.states_computed();
  CHECK(warm.value(st({10, 44}), params) == 7);
  CHECK(warm.states_computed() == before);
}

TEST_CASE("cache persistence round-trips and validates") {
  Solver solver;
  const Params params{1, 3};
  solver.value(start_state(1, 9), params);
  std::ostringstream out;
  solver.cache(params)->write(out);
  const std::string text = out.str();
  CHECK(text.rfind("liargame-cache v1 l=1 k=3\n", 0) == 0);

  std::istringstream in(text);
  auto loaded = MemoCache::read(in);
  CHECK(loaded->lies() == 1);
  CHECK(loaded->cap() == 3);
  CHECK(loaded->size() == solver.cache(params)->size());

  std::ostringstream out2;
  loaded->write(out2);
  CHECK(out2.str() == text);  // byte-identical round trip

  // A warmed solver recomputes nothing.
  Solver warmed;
  warmed.adopt_cache(loaded);
  CHECK(warmed.value(start_state(1, 9), params) ==
        solver.value(start_state(1, 9), params));
  CHECK(warmed.states_computed() == 0);

  std::istringstream bad_header("liargame-cache v2 l=1 k=3\n");
  CHECK_THROWS_AS(MemoCache::read(bad_header), parse_error);
  std::istringstream bad_line("liargame-cache v1 l=1 k=3\n0,2=x\n");
  CHECK_THROWS_AS(MemoCache::read(bad_line), parse_error);
  std::istringstream bad_order("liargame-cache v1 l=1 k=3\n0,3=1\n0,2=1\n");
  CHECK_THROWS_AS(MemoCache::read(bad_order), parse_error);
  std::istringstream bad_arity("liargame-cache v1 l=2 k=3\n0,2=1\n");
  CHECK_THROWS_AS(MemoCache::read(bad_arity), parse_error);
}

TEST_CASE("strategy trees reach every leaf within the value") {
  Solver solver;
  const StrategyNode tree =
      extract_strategy(solver, start_state(0, 8), Params{0, 8});
  CHECK(strategy_depth(tree) == 3);

  const StrategyNode big = extract_strategy(solver, st({10, 44}), Params{1, 16});
  CHECK(strategy_depth(big) == 7);
  CHECK(big.query == Query{{7, 9}});

  // Every leaf is terminal; internal nodes drop the value by one on the
  // worse branch.
  auto walk = [&](auto&& self, const StrategyNode& node) -> void {
    if (!node.query) {
      CHECK(node.state.terminal());
      return;
    }
    self(self, *node.on_yes);
    self(self, *node.on_no);
  };
  walk(walk, big);

  CHECK_THROWS_AS(extract_strategy(solver, st({10, 44}), Params{1, 16}, 5),
                  budget_error);
}

TEST_CASE("concurrent solves through one instance agree with a lone solver") {
  Solver reference;
  const Params params{1, 16};
  std::vector<int> want;
  for (std::int64_t n = 2; n <= 56; ++n)
    want.push_back(reference.value(start_state(1, n), params));

  Solver shared;
  std::vector<std::future<std::vector<int>>> workers;
  for (int w = 0; w < 8; ++w) {
    workers.push_back(std::async(std::launch::async, [&shared, &params, w]() {
      std::vector<int> got;
      // Different starting offsets make the threads race on shared states.
      for (std::int64_t n = 2 + (w % 5); n <= 56; ++n)
        got.push_back(shared.value(start_state(1, n), params));
      return got;
    }));
  }
  for (std::size_t w = 0; w < workers.size(); ++w) {
    const auto got = workers[w].get();
    const std::size_t offset = w % 5;
    REQUIRE(got.size() == want.size() - offset);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i + offset]);
  }
}

TEST_CASE("cache rejects duplicate entries") {
  std::istringstream dup("liargame-cache v1 l=0 k=2\n4=2\n4=2\n");
  CHECK_THROWS_AS(MemoCache::read(dup), parse_error);
}

TEST_CASE("solve rejects mismatched inputs") {
  Solver solver;
  CHECK_THROWS_AS(solver.value(st({1, 1}), Params{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(solver.value(st({2}), Params{0, 0}), std::invalid_argument);
}

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "liargame/solver.hpp"

namespace liargame {

// One violated instance: enough to re-run the single case by hand.
struct Witness {
  std::string instance;  // key=value description of the inputs
  std::string lhs;
  std::string relation;  // the asserted relation, e.g. "<="
  std::string rhs;
};

struct CheckReport {
  std::string name;
  std::string range;  // human-readable description of the swept domain
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;  // excluded by the statement itself
  std::vector<Witness> failures;
  std::vector<std::string> notes;  // informational output, never a failure

  bool passed() const { return failures.empty(); }
};

// Enumeration budgets. The defaults keep every check inside the
// oracle-verified core plus a few targeted larger instances.
struct VerifyBudget {
  std::int64_t max_total = 8;       // state totals for exhaustive sweeps
  int max_lies = 2;
  std::int64_t max_cap = 3;
  std::int64_t sandwich_n_max = 24;     // bound sandwiches on fresh games
  std::int64_t closed_form_n_max = 64;  // no-lie closed form
  std::int64_t weight_n_max = 40;       // weight / log-estimate sandwiches
  bool extras = true;                   // targeted large instances (k=16, n=56)
};

// Accepts "total=8", "lies=2", "cap=3", "sandwich_n=24", "closed_form_n=64",
// "weight_n=40", "extras=0|1". Throws parse_error on anything else.
void apply_budget_override(VerifyBudget& budget, std::string_view key_eq_value);

using Checker = std::function<CheckReport(Solver&, const VerifyBudget&)>;

// All checkers in their canonical execution order.
const std::vector<std::pair<std::string, Checker>>& checker_registry();

// Runs the registered checkers whose names start with one of the filters
// (all of them when filters is empty), optionally in parallel. Report order
// always follows the registry.
std::vector<CheckReport> run_checkers(Solver& solver, const VerifyBudget& budget,
                                      const std::vector<std::string>& filters = {},
                                      bool parallel = true);

std::string reports_to_json(const std::vector<CheckReport>& reports);

// Individual checkers (also reachable through the registry).
CheckReport check_convexity_restricted(Solver&, const VerifyBudget&);
CheckReport check_convexity_basic(Solver&, const VerifyBudget&);
CheckReport check_end_of_game(Solver&, const VerifyBudget&);
CheckReport check_forced_no_optimal(Solver&, const VerifyBudget&);
CheckReport check_block_query_optimal(Solver&, const VerifyBudget&);
CheckReport check_one_more_lie(Solver&, const VerifyBudget&);
CheckReport check_one_question_diff(Solver&, const VerifyBudget&);
CheckReport check_weight_identity(Solver&, const VerifyBudget&);
CheckReport check_weight_bound_sandwich(Solver&, const VerifyBudget&);
CheckReport check_log_estimate_sandwich(Solver&, const VerifyBudget&);
CheckReport check_bound_sandwiches(Solver&, const VerifyBudget&);
CheckReport check_large_n_exact(Solver&, const VerifyBudget&);
CheckReport check_no_lie_closed_form(Solver&, const VerifyBudget&);
CheckReport check_cap_one_closed_form(Solver&, const VerifyBudget&);
CheckReport check_greedy_no_run(Solver&, const VerifyBudget&);
CheckReport check_conjecture_counterexample(Solver&, const VerifyBudget&);
CheckReport check_conjecture_scan(Solver&, const VerifyBudget&);

}  // namespace liargame

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "liargame/verify.hpp"

using namespace liargame;

namespace {

VerifyBudget quick_budget() {
  VerifyBudget b;
  b.max_total = 6;
  b.max_lies = 2;
  b.max_cap = 2;
  b.sandwich_n_max = 16;
  b.closed_form_n_max = 24;
  b.weight_n_max = 20;
  b.extras = false;
  return b;
}

}  // namespace

TEST_CASE("registry covers every statement the suite promises to check") {
  const std::set<std::string> required = {
      "convexity-restricted",  "convexity-basic",
      "end-of-game",           "forced-no-optimal",
      "block-query-optimal",   "one-more-lie",
      "one-question-diff",     "weight-identity",
      "weight-bound-sandwich", "log-estimate-sandwich",
      "bound-sandwiches",      "large-n-exact",
      "no-lie-closed-form",    "cap-one-closed-form",
      "greedy-no-run",         "conjecture-counterexample",
      "conjecture-scan",
  };
  std::set<std::string> registered;
  for (const auto& [name, fn] : checker_registry()) registered.insert(name);
  for (const auto& name : required) {
    INFO("missing checker: " << name);
    CHECK(registered.count(name) == 1);
  }
  CHECK(registered.size() == required.size());
}

TEST_CASE("every checker passes on the quick budget") {
  Solver solver;
  const VerifyBudget budget = quick_budget();
  for (const auto& report : run_checkers(solver, budget, {}, true)) {
    INFO(report.name << ": " << (report.failures.empty()
                                     ? std::string("ok")
                                     : report.failures.front().instance + " " +
                                           report.failures.front().lhs + " " +
                                           report.failures.front().relation + " " +
                                           report.failures.front().rhs));
    CHECK(report.passed());
    if (report.name != "conjecture-counterexample")  // extras disabled here
      CHECK(report.instances + report.skipped + report.notes.size() > 0);
  }
}

TEST_CASE("convexity sweep skips exactly the excluded boundary case") {
  Solver solver;
  VerifyBudget budget = quick_budget();
  budget.max_total = 4;
  budget.max_lies = 2;
  const CheckReport report = check_convexity_restricted(solver, budget);
  CHECK(report.passed());
  CHECK(report.skipped > 0);  // total == 2 with a == lies - j + 1 exists in range
  CHECK(report.instances > 0);
}

TEST_CASE("checker selection by name prefix") {
  Solver solver;
  VerifyBudget budget = quick_budget();
  budget.extras = true;
  const auto reports = run_checkers(solver, budget, {"conjecture"}, false);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name == "conjecture-counterexample");
  CHECK(reports[1].name == "conjecture-scan");
  CHECK(reports[0].passed());
  CHECK(reports[0].instances == 7);
  // The published instance shows up as a mismatch in the informational scan.
  bool counterexample_noted = false;
  for (const auto& note : reports[1].notes)
    if (note.find("k=16 n=56") != std::string::npos &&
        note.find("fails at 0") == std::string::npos)
      counterexample_noted = true;
  CHECK(counterexample_noted);
}

TEST_CASE("failing instances produce re-runnable witnesses") {
  Solver solver;
  VerifyBudget budget = quick_budget();
  // Nonsense budget: claim the cap-one closed form on an unrestricted game by
  // abusing the checker interface is not possible, so instead check witness
  // rendering through the JSON path with a synthetic report.
  CheckReport fake;
  fake.name = "demo";
  fake.range = "none";
  fake.instances = 1;
  fake.failures.push_back({"lies=1 k=2 state=0,2", "3", "<=", "2"});
  const std::string json = reports_to_json({fake});
  CHECK(json.find("\"instance\":\"lies=1 k=2 state=0,2\"") != std::string::npos);
  CHECK(json.find("\"passed\":false") != std::string::npos);

  // And the real checkers stay silent on the same budget.
  const CheckReport ok = check_end_of_game(solver, budget);
  CHECK(ok.passed());
  const std::string ok_json = reports_to_json({ok});
  CHECK(ok_json.find("\"passed\":true") != std::string::npos);
  CHECK(ok_json.find("\"failures\":[]") != std::string::npos);
}

TEST_CASE("budget overrides parse and reject junk") {
  VerifyBudget b;
  apply_budget_override(b, "total=6");
  CHECK(b.max_total == 6);
  apply_budget_override(b, "lies=1");
  CHECK(b.max_lies == 1);
  apply_budget_override(b, "cap=2");
  CHECK(b.max_cap == 2);
  apply_budget_override(b, "sandwich_n=12");
  CHECK(b.sandwich_n_max == 12);
  apply_budget_override(b, "extras=0");
  CHECK_FALSE(b.extras);
  CHECK_THROWS_AS(apply_budget_override(b, "total"), parse_error);
  CHECK_THROWS_AS(apply_budget_override(b, "totally=6"), parse_error);
  CHECK_THROWS_AS(apply_budget_override(b, "total=six"), parse_error);
}

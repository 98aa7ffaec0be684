#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "liargame/bounds.hpp"
#include "liargame/solver.hpp"

namespace liargame {

// Every computable bound for one (n, k, lies) instance, plus the exact value
// when the solver can afford it.
struct BoundReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  int lies = 0;
  std::int64_t l = 0;
  std::int64_t l_plus = 0;
  std::int64_t l_hat = 0;
  std::optional<std::int64_t> l_tilde;
  bool theorem2_applicable = false;
  std::optional<std::int64_t> theorem2_value;
  std::optional<int> exact;

  // Flat JSON object, snake_case keys, absent optionals as null.
  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

struct ReportOptions {
  bool with_exact = true;
  bool with_l_tilde = true;
  // Skip the solver (null `exact`) above this many starting candidates.
  std::int64_t exact_max_total = 64;
  // Cap used for the unrestricted-game evaluations behind l/l_plus/l_tilde.
  // Sharing one value across a sweep lets all rows reuse one cache shard;
  // any value at least the live total yields the unrestricted game. 0 means
  // "per call": each evaluation uses its own state total.
  std::int64_t shared_basic_cap = 0;
};

// Throws std::domain_error outside 1 < k < floor(n/2) and budget_error when
// a requested solver-backed piece cannot be afforded; l_tilde and exact are
// reported as null (explicitly infeasible) when skipped by options.
BoundReport make_bound_report(std::int64_t n, std::int64_t k, int lies,
                              Solver& solver, const ReportOptions& options = {});

}  // namespace liargame

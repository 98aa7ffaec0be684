#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "liargame/game.hpp"

namespace liargame {

// Remainder of n*i divided by k; the leftover block size after i greedy
// rounds of k-element questions.
std::int64_t scaled_remainder(std::int64_t n, std::int64_t k, int i);

// Ceiling of log2(x) for x >= 1, computed from the bit length of x-1.
int ceil_log2(std::int64_t x);

// Exact value of the no-lie capped game: floor(n/k) - 1 + ceil(log2(k + n mod k)).
// Valid for 1 <= k <= n.
std::int64_t ru0k_exact(std::int64_t n, std::int64_t k);

// Exact value with single-element questions: (lies+1)*n - 1.
std::int64_t ruk1_exact(std::int64_t n, int lies);

// Closed-form sandwich for the unrestricted game, base-2 logs:
//   log n + l*log log 2n - l*log l <= RU_l(n)
//                                  <= log n + l*log log 2n + 2l*log l + l + 2.
// Requires n >= 2, lies >= 1.
struct EstimateBand {
  double lower = 0;
  double upper = 0;
};
EstimateBand ru_estimate(std::int64_t n, int lies);

// Evaluators injected by callers so this module never depends on the solver.
// basic(l', n') is the unrestricted-game value of a fresh n'-candidate game;
// basic_state(l', state) the unrestricted value of an arbitrary state.
using BasicValueFn = std::function<int(int lies, std::int64_t n)>;
using BasicStateValueFn = std::function<int(int lies, const GameState& state)>;

// Capped-game bounds need 1 < k < floor(n/2); above that the cap is inert.
void require_restricted_domain(std::int64_t n, std::int64_t k);  // std::domain_error

// max over 0 <= p <= lies of floor((p+1)n/k) - 1 + basic(lies-p, k).
// Lower bound; the true value exceeds it by at most lies+1.
std::int64_t bound_l(std::int64_t n, std::int64_t k, int lies,
                     const BasicValueFn& basic);

// Variant with basic(lies-p, k + m_{p+1}); sits between bound_l and
// bound_l_tilde.
std::int64_t bound_l_plus(std::int64_t n, std::int64_t k, int lies,
                          const BasicValueFn& basic);

// max over p of floor((p+1)n/k) - 1 + weight_bound(k, lies-p): always
// computable; the true value exceeds it by at most 2*lies+1.
std::int64_t bound_l_hat(std::int64_t n, std::int64_t k, int lies);

// max over p of floor((p+1)n/k) - 1 + basic_state(lies-p, state), where the
// state is (k + m_{p+1}, n - k - m_{p+1}, 0, ..., 0) cut down to lies-p+1
// components. Tightest of the family: true value exceeds it by at most lies.
std::int64_t bound_l_tilde(std::int64_t n, std::int64_t k, int lies,
                           const BasicStateValueFn& basic_state);

// Exact-value formula for n large relative to k:
//   floor((lies+1)n/k) - 1 + ceil(log2(k + m_{lies+1}))
// applicable once n >= max{k(l+5), k(loglog 2k + 6), k(loglog 2k + 2 log l + 5)}.
// The real-valued thresholds are rounded up before comparison, which can only
// shrink the region where the formula is claimed to apply.
struct LargeNExact {
  bool applicable = false;
  std::int64_t value = 0;  // meaningful only when applicable
};
LargeNExact large_n_exact(std::int64_t n, std::int64_t k, int lies);

// Quantities of the conjectured optimal-query rule for two-component states
// at one lie. ch(a,b) = min{q : (q+1)a + b <= 2^q}; C = max{ch, ru0k(2a+b)};
// chi0/chi1 maximize the asked split subject to both children being solvable
// in C-1 questions. Needs an exact evaluator for one-lie capped states.
int ch_bound(std::int64_t a, std::int64_t b);

using OneLieStateValueFn = std::function<int(const GameState& state)>;

struct ConjectureQuantities {
  int c = 0;
  std::int64_t chi0 = 0;
  std::int64_t chi1 = 0;
};
ConjectureQuantities conjecture_quantities(std::int64_t a, std::int64_t b,
                                           std::int64_t k,
                                           const OneLieStateValueFn& one_lie_value);

}  // namespace liargame

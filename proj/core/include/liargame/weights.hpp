#pragma once

#include <cstdint>
#include <vector>

#include "liargame/bigint.hpp"
#include "liargame/game.hpp"

namespace liargame {

// Partial binomial sum C(q,0) + C(q,1) + ... + C(q,terms), exact.
// terms < 0 yields 0 (the contribution of an element that just fell out of
// the search), terms >= q yields 2^q.
BigUint binom_le(std::int64_t q, int terms);

// binom_le(q, t) for t = 0..max_terms in one pass; row[t] = C(q, <=t).
std::vector<BigUint> binom_le_row(std::int64_t q, int max_terms);

// Weight of a state when q questions remain: sum of binom_le(q, lies-i) *
// counts[i]. The two children of any question split the parent's weight
// exactly, so it can halve at best; a state solvable in q questions
// satisfies weight <= 2^q.
BigUint state_weight(const GameState& state, std::int64_t q);
BigUint state_weight_with_row(const std::vector<std::int64_t>& counts,
                              const std::vector<BigUint>& row);

// Volume bound for a fresh n-candidate game: the smallest q with
// n * binom_le(q, lies) <= 2^q. Lower bound for the unrestricted game and
// a fortiori for any question-size cap; the unrestricted value exceeds it
// by at most `lies`.
int weight_bound(std::int64_t n, int lies);

// Generalization to an arbitrary state: smallest q with weight(state, q) <= 2^q.
// Requires a nonempty state.
int state_weight_bound(const GameState& state);

}  // namespace liargame

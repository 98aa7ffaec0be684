#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liargame {

// Thrown on malformed textual input (state literals, cache files, ...).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a computation would exceed its configured resource budget.
// Callers get this instead of a wrong or truncated answer.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Game family: lie budget and per-question size cap. Any cap at least as
// large as the number of live candidates behaves as the unrestricted game,
// since a question never usefully includes every remaining candidate.
struct Params {
  int lies = 0;
  std::int64_t cap = 1;
};

void validate(const Params& params);  // throws std::invalid_argument

// Berlekamp state vector: counts[i] is the number of candidates that have
// received exactly i NO answers so far. An element with lies+1 NOs cannot be
// the secret; `excluded` tracks how many fell out. Two states with equal
// counts are game-equivalent regardless of excluded.
struct GameState {
  std::vector<std::int64_t> counts;
  std::int64_t excluded = 0;

  int lies() const { return static_cast<int>(counts.size()) - 1; }
  std::int64_t total() const;
  bool terminal() const { return total() <= 1; }

  friend bool operator==(const GameState&, const GameState&) = default;
};

GameState make_state(std::vector<std::int64_t> counts, std::int64_t excluded = 0);
// Fresh game on n candidates: (n, 0, ..., 0).
GameState start_state(int lies, std::int64_t n);

// How many candidates of each component a question addresses.
struct Query {
  std::vector<std::int64_t> asks;

  std::int64_t size() const;

  friend bool operator==(const Query&, const Query&) = default;
  friend auto operator<=>(const Query& a, const Query& b) {
    return a.asks <=> b.asks;
  }
};

enum class Answer { yes, no };

constexpr const char* to_cstring(Answer a) {
  return a == Answer::yes ? "YES" : "NO";
}

// State transition. YES keeps queried elements where they are and gives every
// unqueried element one more NO; the NO answer does the opposite. Elements
// pushed past the last component are moved into `excluded`.
// Requires 0 <= asks[i] <= counts[i] componentwise; throws invalid_argument.
GameState apply_answer(const GameState& state, const Query& query, Answer answer);

// All admissible queries in ascending lexicographic order: componentwise at
// most the state, total size between 1 and min(cap, total-1). The full
// live set is excluded (its YES branch repeats the parent state).
// Terminal states yield an empty sequence.
std::vector<Query> enumerate_queries(const GameState& state, const Params& params);

// Move one element from component `from` to component `to` (from < to;
// to == lies+1 excludes it). The resulting position is never harder.
GameState relax_element(const GameState& state, int from, int to);

// Sum of (lies+1-i) * counts[i]; strictly decreases along both branches of
// every admissible query, so all game plays terminate.
std::int64_t potential(const GameState& state);

// Text form "x0,x1,...,xl" (comma-separated decimal, no spaces).
std::string format_counts(const std::vector<std::int64_t>& counts);
std::vector<std::int64_t> parse_counts(std::string_view text);  // throws parse_error

std::string to_string(const GameState& state);
std::string to_string(const Query& query);

}  // namespace liargame

#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liargame/game.hpp"
#include "liargame/solver.hpp"

namespace liargame {

// A policy emitted an inadmissible query, ran out of scripted answers, or
// otherwise broke the game contract; the message names the offender.
struct simulation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using QuestionerPolicy = std::function<Query(const GameState&, const Params&)>;
using ResponderPolicy =
    std::function<Answer(const GameState&, const Query&, const Params&)>;

// Fill components from the lowest index up, min(cap, total-1) elements in
// total: ask cap elements of the first non-empty component when possible,
// otherwise all of them plus the spillover from the next.
Query greedy_lowest(const GameState& state, const Params& params);

// Canonical optimal question against a responder known to answer NO:
// asks[i] = min(counts[i], cap - counts[0] - ... - counts[i-1]), floored at 0.
// Sums to min(cap, total); when total <= cap this is the full live set, which
// the solver's admissible menu deliberately omits.
Query forced_no_query(const GameState& state, const Params& params);

// The block question (cap, 0, ..., 0); optimal whenever counts[0] >= 2*cap.
// Throws std::invalid_argument below that threshold.
Query block_query(const GameState& state, const Params& params);

// Solver-backed optimal play: always asks the principal optimal query.
QuestionerPolicy optimal_policy(Solver& solver);

// Greedy sweep until only the last component is populated, then optimal
// endgame. Matches the large-n questioning scheme.
QuestionerPolicy greedy_then_optimal_policy(Solver& solver);

// Worst-case responder: answers toward the child with the larger exact value
// (NO on ties). Guarantees transcripts of length exactly value(start) against
// optimal play and at least value(start) against anything.
ResponderPolicy adversary_policy(Solver& solver);

// Solver-free adversary: keeps the heavier child by weight, which alone
// forces at least state_weight_bound(start) questions.
ResponderPolicy weight_adversary();

ResponderPolicy constant_responder(Answer answer);
// Replays a fixed answer list; throws simulation_error when exhausted.
ResponderPolicy scripted_responder(std::vector<Answer> answers);

// Tracks concrete element identities 1..n on top of the counts vector.
// A count-level query addresses the lowest-numbered live ids per component.
class ElementAssignment {
 public:
  ElementAssignment(std::int64_t n, int lies);

  std::int64_t n() const { return std::int64_t(component_.size()); }
  int lies() const { return lies_; }
  int component_of(std::int64_t id) const;  // lies()+1 means excluded
  bool live(std::int64_t id) const { return component_of(id) <= lies_; }
  GameState state() const;
  std::vector<std::int64_t> ids_in_component(int component) const;

  // Concrete ids addressed by a count-level query.
  std::vector<std::int64_t> concrete_query(const Query& query) const;
  // Count-level query for a set of ids; excluded ids are ignored.
  Query count_query(const std::vector<std::int64_t>& ids) const;

  void apply_ids(const std::vector<std::int64_t>& ids, Answer answer);
  void apply(const Query& query, Answer answer);

 private:
  std::vector<int> component_;  // by id-1
  int lies_;
};

// Responder committed to one secret element, lying exactly on the given
// 0-based rounds. The lie set must fit the lie budget.
ResponderPolicy honest_responder(std::int64_t n, int lies, std::int64_t secret_id,
                                 std::set<std::size_t> lie_rounds);

struct Move {
  Query query;
  Answer answer;
  GameState after;
};

struct Transcript {
  GameState start;
  std::vector<Move> moves;

  const GameState& outcome() const { return moves.empty() ? start : moves.back().after; }
  std::size_t length() const { return moves.size(); }
  std::string to_json() const;
};

// Runs questioner vs responder to a terminal state. Validates every emitted
// query against the admissible menu; termination is guaranteed because the
// potential strictly decreases each move.
Transcript simulate(const QuestionerPolicy& questioner,
                    const ResponderPolicy& responder, GameState start,
                    const Params& params,
                    std::string_view questioner_name = "questioner",
                    std::string_view responder_name = "responder");

}  // namespace liargame

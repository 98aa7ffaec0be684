#include "liargame/strategies.hpp"

#include <algorithm>
#include <memory>

#include <json.hpp>

#include "liargame/weights.hpp"

namespace liargame {

Query greedy_lowest(const GameState& state, const Params& params) {
  validate(params);
  const std::int64_t total = state.total();
  if (total <= 1)
    throw std::invalid_argument("greedy_lowest: terminal state");
  std::int64_t remaining = std::min<std::int64_t>(params.cap, total - 1);
  Query q;
  q.asks.resize(state.counts.size(), 0);
  for (std::size_t i = 0; i < state.counts.size() && remaining > 0; ++i) {
    q.asks[i] = std::min(state.counts[i], remaining);
    remaining -= q.asks[i];
  }
  return q;
}

Query forced_no_query(const GameState& state, const Params& params) {
  validate(params);
  if (state.total() <= 1)
    throw std::invalid_argument("forced_no_query: terminal state");
  Query q;
  q.asks.resize(state.counts.size(), 0);
  std::int64_t prefix = 0;
  for (std::size_t i = 0; i < state.counts.size(); ++i) {
    q.asks[i] = std::clamp<std::int64_t>(params.cap - prefix, 0, state.counts[i]);
    prefix += state.counts[i];
  }
  return q;
}

Query block_query(const GameState& state, const Params& params) {
  validate(params);
  if (state.counts[0] / 2 < params.cap)
    throw std::invalid_argument("block_query: needs counts[0] >= 2*cap");
  Query q;
  q.asks.resize(state.counts.size(), 0);
  q.asks[0] = params.cap;
  return q;
}

QuestionerPolicy optimal_policy(Solver& solver) {
  return [&solver](const GameState& state, const Params& params) {
    return solver.solve(state, params).principal();
  };
}

QuestionerPolicy greedy_then_optimal_policy(Solver& solver) {
  return [&solver](const GameState& state, const Params& params) {
    const auto& x = state.counts;
    const bool only_last =
        std::all_of(x.begin(), x.end() - 1, [](std::int64_t c) { return c == 0; });
    if (only_last) return solver.solve(state, params).principal();
    return greedy_lowest(state, params);
  };
}

ResponderPolicy adversary_policy(Solver& solver) {
  return [&solver](const GameState& state, const Query& query, const Params& params) {
    const int v_yes = solver.value(apply_answer(state, query, Answer::yes), params);
    const int v_no = solver.value(apply_answer(state, query, Answer::no), params);
    return v_yes > v_no ? Answer::yes : Answer::no;
  };
}

ResponderPolicy weight_adversary() {
  return [](const GameState& state, const Query& query, const Params&) {
    // The parent's weight at index W-1 still exceeds 2^(W-1) and splits into
    // the children's weights at W-2, so the heavier child keeps a bound of
    // W-1. Comparing at any other index loses that guarantee.
    const int bound = state_weight_bound(state);
    const auto ref = std::int64_t(std::max(bound - 2, 0));
    const BigUint w_yes = state_weight(apply_answer(state, query, Answer::yes), ref);
    const BigUint w_no = state_weight(apply_answer(state, query, Answer::no), ref);
    return w_yes > w_no ? Answer::yes : Answer::no;
  };
}

ResponderPolicy constant_responder(Answer answer) {
  return [answer](const GameState&, const Query&, const Params&) { return answer; };
}

ResponderPolicy scripted_responder(std::vector<Answer> answers) {
  auto next = std::make_shared<std::size_t>(0);
  return [answers = std::move(answers), next](const GameState&, const Query&,
                                              const Params&) {
    if (*next >= answers.size())
      throw simulation_error("scripted responder exhausted after " +
                             std::to_string(answers.size()) + " answers");
    return answers[(*next)++];
  };
}

// --- ElementAssignment --------------------------------------------------

ElementAssignment::ElementAssignment(std::int64_t n, int lies) : lies_(lies) {
  if (n < 1) throw std::invalid_argument("assignment: n must be >= 1");
  if (lies < 0) throw std::invalid_argument("assignment: lies must be >= 0");
  component_.assign(std::size_t(n), 0);
}

int ElementAssignment::component_of(std::int64_t id) const {
  if (id < 1 || id > n())
    throw std::invalid_argument("assignment: id " + std::to_string(id) +
                                " out of range 1.." + std::to_string(n()));
  return component_[std::size_t(id - 1)];
}

GameState ElementAssignment::state() const {
  GameState s;
  s.counts.assign(std::size_t(lies_) + 1, 0);
  for (int c : component_) {
    if (c > lies_)
      s.excluded += 1;
    else
      s.counts[std::size_t(c)] += 1;
  }
  return s;
}

std::vector<std::int64_t> ElementAssignment::ids_in_component(int component) const {
  std::vector<std::int64_t> out;
  for (std::int64_t id = 1; id <= n(); ++id)
    if (component_[std::size_t(id - 1)] == component) out.push_back(id);
  return out;
}

std::vector<std::int64_t> ElementAssignment::concrete_query(const Query& query) const {
  if (query.asks.size() != std::size_t(lies_) + 1)
    throw std::invalid_argument("assignment: query does not match lie budget");
  std::vector<std::int64_t> out;
  for (int c = 0; c <= lies_; ++c) {
    std::int64_t want = query.asks[std::size_t(c)];
    if (want == 0) continue;
    for (std::int64_t id = 1; id <= n() && want > 0; ++id) {
      if (component_[std::size_t(id - 1)] == c) {
        out.push_back(id);
        --want;
      }
    }
    if (want > 0)
      throw std::invalid_argument("assignment: query asks more elements than live");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Query ElementAssignment::count_query(const std::vector<std::int64_t>& ids) const {
  Query q;
  q.asks.assign(std::size_t(lies_) + 1, 0);
  for (auto id : ids) {
    const int c = component_of(id);
    if (c > lies_) continue;  // eliminated elements carry no information
    q.asks[std::size_t(c)] += 1;
  }
  return q;
}

void ElementAssignment::apply_ids(const std::vector<std::int64_t>& ids, Answer answer) {
  std::vector<char> asked(component_.size(), 0);
  for (auto id : ids) {
    component_of(id);  // range check
    asked[std::size_t(id - 1)] = 1;
  }
  for (std::size_t i = 0; i < component_.size(); ++i) {
    if (component_[i] > lies_) continue;
    // YES: unasked elements take one more NO. NO: asked elements do.
    const bool hit = (answer == Answer::yes) ? !asked[i] : bool(asked[i]);
    if (hit) component_[i] += 1;
  }
}

void ElementAssignment::apply(const Query& query, Answer answer) {
  apply_ids(concrete_query(query), answer);
}

ResponderPolicy honest_responder(std::int64_t n, int lies, std::int64_t secret_id,
                                 std::set<std::size_t> lie_rounds) {
  if (secret_id < 1 || secret_id > n)
    throw std::invalid_argument("honest_responder: secret out of range");
  if (std::int64_t(lie_rounds.size()) > lies)
    throw std::invalid_argument("honest_responder: more lies scheduled than allowed");
  struct State {
    ElementAssignment assignment;
    std::size_t round = 0;
  };
  auto st = std::make_shared<State>(State{ElementAssignment(n, lies), 0});
  return [st, secret_id, lie_rounds = std::move(lie_rounds)](
             const GameState& state, const Query& query, const Params&) {
    if (st->assignment.state().counts != state.counts)
      throw simulation_error("honest responder: game drifted from its assignment");
    const auto ids = st->assignment.concrete_query(query);
    const bool truth = std::binary_search(ids.begin(), ids.end(), secret_id);
    const bool lie = lie_rounds.count(st->round) > 0;
    const Answer answer = (truth != lie) ? Answer::yes : Answer::no;
    st->assignment.apply_ids(ids, answer);
    st->round += 1;
    return answer;
  };
}

// --- Simulation ---------------------------------------------------------

namespace {

void require_admissible(const GameState& state, const Query& query,
                        const Params& params, std::string_view policy) {
  const auto fail = [&](const std::string& why) {
    throw simulation_error("policy '" + std::string(policy) +
                           "' emitted inadmissible query " + to_string(query) +
                           " at state " + to_string(state) + ": " + why);
  };
  if (query.asks.size() != state.counts.size()) fail("wrong component count");
  for (std::size_t i = 0; i < query.asks.size(); ++i)
    if (query.asks[i] < 0 || query.asks[i] > state.counts[i])
      fail("component " + std::to_string(i) + " overdrawn");
  const std::int64_t size = query.size();
  if (size < 1) fail("empty question");
  if (size > std::min<std::int64_t>(params.cap, state.total() - 1))
    fail("question larger than min(cap, total-1)");
}

}  // namespace

Transcript simulate(const QuestionerPolicy& questioner,
                    const ResponderPolicy& responder, GameState start,
                    const Params& params, std::string_view questioner_name,
                    std::string_view responder_name) {
  validate(params);
  Transcript t;
  t.start = start;
  GameState state = std::move(start);
  // Potential drops every move, so this loop is finite.
  while (!state.terminal()) {
    Query query = questioner(state, params);
    require_admissible(state, query, params, questioner_name);
    Answer answer;
    try {
      answer = responder(state, query, params);
    } catch (const simulation_error&) {
      throw;
    } catch (const std::exception& e) {
      throw simulation_error("policy '" + std::string(responder_name) +
                             "' failed: " + e.what());
    }
    state = apply_answer(state, query, answer);
    t.moves.push_back(Move{std::move(query), answer, state});
  }
  return t;
}

std::string Transcript::to_json() const {
  nlohmann::ordered_json j;
  j["start"] = to_string(start);
  auto moves_json = nlohmann::ordered_json::array();
  for (const auto& move : moves) {
    nlohmann::ordered_json m;
    m["q"] = to_string(move.query);
    m["a"] = to_cstring(move.answer);
    m["state"] = to_string(move.after);
    moves_json.push_back(std::move(m));
  }
  j["moves"] = std::move(moves_json);
  j["length"] = length();
  return j.dump();
}

}  // namespace liargame

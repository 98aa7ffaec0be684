#include "liargame/game.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace liargame {

void validate(const Params& params) {
  if (params.lies < 0)
    throw std::invalid_argument("params: lies must be >= 0");
  if (params.cap < 1)
    throw std::invalid_argument("params: cap must be >= 1");
}

std::int64_t GameState::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

GameState make_state(std::vector<std::int64_t> counts, std::int64_t excluded) {
  if (counts.empty())
    throw std::invalid_argument("state: counts must have at least one component");
  for (auto c : counts)
    if (c < 0) throw std::invalid_argument("state: negative component count");
  if (excluded < 0) throw std::invalid_argument("state: negative excluded count");
  return GameState{std::move(counts), excluded};
}

GameState start_state(int lies, std::int64_t n) {
  if (lies < 0) throw std::invalid_argument("start_state: lies must be >= 0");
  if (n < 0) throw std::invalid_argument("start_state: n must be >= 0");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(lies) + 1, 0);
  counts[0] = n;
  return GameState{std::move(counts), 0};
}

std::int64_t Query::size() const {
  return std::accumulate(asks.begin(), asks.end(), std::int64_t{0});
}

GameState apply_answer(const GameState& state, const Query& query, Answer answer) {
  const auto& x = state.counts;
  const auto& q = query.asks;
  if (q.size() != x.size())
    throw std::invalid_argument("query: component count does not match state");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (q[i] < 0 || q[i] > x[i])
      throw std::invalid_argument("query: component " + std::to_string(i) +
                                  " asks " + std::to_string(q[i]) +
                                  " of " + std::to_string(x[i]) + " elements");
  }

  const std::size_t top = x.size() - 1;
  GameState out;
  out.counts.resize(x.size());
  if (answer == Answer::yes) {
    out.counts[0] = q[0];
    for (std::size_t i = 1; i <= top; ++i)
      out.counts[i] = q[i] + (x[i - 1] - q[i - 1]);
    out.excluded = state.excluded + (x[top] - q[top]);
  } else {
    out.counts[0] = x[0] - q[0];
    for (std::size_t i = 1; i <= top; ++i)
      out.counts[i] = (x[i] - q[i]) + q[i - 1];
    out.excluded = state.excluded + q[top];
  }
  return out;
}

std::vector<Query> enumerate_queries(const GameState& state, const Params& params) {
  validate(params);
  const std::int64_t total = state.total();
  std::vector<Query> out;
  if (total <= 1) return out;

  const std::int64_t budget = std::min<std::int64_t>(params.cap, total - 1);
  std::vector<std::int64_t> q(state.counts.size(), 0);

  // Odometer with the leftmost component most significant: ascending lex.
  auto fill = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
    if (i == q.size()) {
      if (used >= 1) out.push_back(Query{q});
      return;
    }
    const std::int64_t limit = std::min(state.counts[i], budget - used);
    for (std::int64_t v = 0; v <= limit; ++v) {
      q[i] = v;
      self(self, i + 1, used + v);
    }
    q[i] = 0;
  };
  fill(fill, 0, 0);
  return out;
}

GameState relax_element(const GameState& state, int from, int to) {
  const int ncomp = static_cast<int>(state.counts.size());
  if (from < 0 || from >= ncomp || to <= from || to > ncomp)
    throw std::invalid_argument("relax_element: need 0 <= from < to <= lies+1");
  if (state.counts[from] < 1)
    throw std::invalid_argument("relax_element: component " +
                                std::to_string(from) + " is empty");
  GameState out = state;
  out.counts[from] -= 1;
  if (to == ncomp)
    out.excluded += 1;
  else
    out.counts[to] += 1;
  return out;
}

std::int64_t potential(const GameState& state) {
  const auto ncomp = std::int64_t(state.counts.size());
  std::int64_t p = 0;
  for (std::size_t i = 0; i < state.counts.size(); ++i)
    p += (ncomp - std::int64_t(i)) * state.counts[i];
  return p;
}

std::string format_counts(const std::vector<std::int64_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_counts(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) throw parse_error("empty state literal");
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    if (token.empty())
      throw parse_error("state literal: empty component at offset " +
                        std::to_string(pos));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
      throw parse_error("state literal: bad component '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const GameState& state) { return format_counts(state.counts); }

std::string to_string(const Query& query) { return format_counts(query.asks); }

}  // namespace liargame

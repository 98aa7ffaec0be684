#include "liargame/weights.hpp"

#include <stdexcept>

namespace liargame {

std::vector<BigUint> binom_le_row(std::int64_t q, int max_terms) {
  if (q < 0) throw std::invalid_argument("binom_le: q must be >= 0");
  std::vector<BigUint> row;
  if (max_terms < 0) return row;
  row.reserve(std::size_t(max_terms) + 1);
  BigUint binom = 1;  // C(q, 0)
  BigUint acc = binom;
  row.push_back(acc);
  for (int j = 1; j <= max_terms; ++j) {
    if (std::int64_t(j) <= q) {
      // C(q, j) = C(q, j-1) * (q - j + 1) / j, division always exact.
      binom *= std::uint64_t(q - j + 1);
      binom.div_mod(std::uint64_t(j));
      acc += binom;
    }
    row.push_back(acc);
  }
  return row;
}

BigUint binom_le(std::int64_t q, int terms) {
  if (terms < 0) return BigUint{};
  return binom_le_row(q, terms).back();
}

BigUint state_weight_with_row(const std::vector<std::int64_t>& counts,
                              const std::vector<BigUint>& row) {
  const int lies = static_cast<int>(counts.size()) - 1;
  BigUint w;
  for (int i = 0; i <= lies; ++i) {
    if (counts[i] == 0) continue;
    w += row[std::size_t(lies - i)] * std::uint64_t(counts[i]);
  }
  return w;
}

BigUint state_weight(const GameState& state, std::int64_t q) {
  const auto row = binom_le_row(q, state.lies());
  return state_weight_with_row(state.counts, row);
}

int weight_bound(std::int64_t n, int lies) {
  if (n < 1) throw std::invalid_argument("weight_bound: n must be >= 1");
  if (lies < 0) throw std::invalid_argument("weight_bound: lies must be >= 0");
  for (int q = 0;; ++q) {
    BigUint lhs = binom_le(q, lies) * std::uint64_t(n);
    if (lhs <= BigUint::power_of_two(std::uint32_t(q))) return q;
  }
}

int state_weight_bound(const GameState& state) {
  if (state.total() < 1)
    throw std::invalid_argument("state_weight_bound: state has no candidates");
  for (int q = 0;; ++q) {
    BigUint w = state_weight(state, q);
    if (w <= BigUint::power_of_two(std::uint32_t(q))) return q;
  }
}

}  // namespace liargame

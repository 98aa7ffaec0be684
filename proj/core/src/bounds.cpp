#include "liargame/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "liargame/weights.hpp"

namespace liargame {

namespace {

using i128 = __int128;

std::int64_t floor_div_mul(std::int64_t n, int mult, std::int64_t k) {
  return std::int64_t(i128(n) * mult / k);
}

}  // namespace

std::int64_t scaled_remainder(std::int64_t n, std::int64_t k, int i) {
  if (k < 1) throw std::invalid_argument("scaled_remainder: k must be >= 1");
  if (i < 1) throw std::invalid_argument("scaled_remainder: i must be >= 1");
  if (n < 0) throw std::invalid_argument("scaled_remainder: n must be >= 0");
  return std::int64_t(i128(n) * i % k);
}

int ceil_log2(std::int64_t x) {
  if (x < 1) throw std::invalid_argument("ceil_log2: x must be >= 1");
  return std::bit_width(std::uint64_t(x - 1));
}

std::int64_t ru0k_exact(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n)
    throw std::domain_error("ru0k_exact: need 1 <= k <= n");
  return n / k - 1 + ceil_log2(k + n % k);
}

std::int64_t ruk1_exact(std::int64_t n, int lies) {
  if (n < 1) throw std::invalid_argument("ruk1_exact: n must be >= 1");
  if (lies < 0) throw std::invalid_argument("ruk1_exact: lies must be >= 0");
  return std::int64_t(lies + 1) * n - 1;
}

EstimateBand ru_estimate(std::int64_t n, int lies) {
  if (n < 2) throw std::domain_error("ru_estimate: n must be >= 2");
  if (lies < 1) throw std::domain_error("ru_estimate: lies must be >= 1");
  const double l = lies;
  const double log_n = std::log2(double(n));
  const double loglog_2n = std::log2(std::log2(2.0 * double(n)));
  const double l_log_l = l * std::log2(l);  // 0 at lies == 1
  EstimateBand band;
  band.lower = log_n + l * loglog_2n - l_log_l;
  band.upper = log_n + l * loglog_2n + 2 * l_log_l + l + 2;
  return band;
}

void require_restricted_domain(std::int64_t n, std::int64_t k) {
  if (!(1 < k && k < n / 2))
    throw std::domain_error("capped bounds need 1 < k < floor(n/2), got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
}

namespace {

std::int64_t max_over_p(int lies, const std::function<std::int64_t(int p)>& term) {
  std::int64_t best = term(0);
  for (int p = 1; p <= lies; ++p) best = std::max(best, term(p));
  return best;
}

}  // namespace

std::int64_t bound_l(std::int64_t n, std::int64_t k, int lies,
                     const BasicValueFn& basic) {
  require_restricted_domain(n, k);
  return max_over_p(lies, [&](int p) {
    return floor_div_mul(n, p + 1, k) - 1 + basic(lies - p, k);
  });
}

std::int64_t bound_l_plus(std::int64_t n, std::int64_t k, int lies,
                          const BasicValueFn& basic) {
  require_restricted_domain(n, k);
  return max_over_p(lies, [&](int p) {
    return floor_div_mul(n, p + 1, k) - 1 +
           basic(lies - p, k + scaled_remainder(n, k, p + 1));
  });
}

std::int64_t bound_l_hat(std::int64_t n, std::int64_t k, int lies) {
  require_restricted_domain(n, k);
  return max_over_p(lies, [&](int p) {
    return floor_div_mul(n, p + 1, k) - 1 + weight_bound(k, lies - p);
  });
}

std::int64_t bound_l_tilde(std::int64_t n, std::int64_t k, int lies,
                           const BasicStateValueFn& basic_state) {
  require_restricted_domain(n, k);
  return max_over_p(lies, [&](int p) {
    const int sub_lies = lies - p;
    const std::int64_t head = k + scaled_remainder(n, k, p + 1);
    std::vector<std::int64_t> counts(std::size_t(sub_lies) + 1, 0);
    counts[0] = head;
    // With no lies left the tail component is already out of the game.
    if (sub_lies >= 1) counts[1] = n - head;
    return floor_div_mul(n, p + 1, k) - 1 +
           basic_state(sub_lies, GameState{std::move(counts), 0});
  });
}

LargeNExact large_n_exact(std::int64_t n, std::int64_t k, int lies) {
  require_restricted_domain(n, k);
  if (lies < 1) throw std::domain_error("large_n_exact: lies must be >= 1");
  const double loglog_2k = std::log2(std::log2(2.0 * double(k)));
  const std::int64_t t1 = k * (lies + 5);
  const auto t2 = std::int64_t(std::ceil(double(k) * (loglog_2k + 6)));
  const auto t3 = std::int64_t(
      std::ceil(double(k) * (loglog_2k + 2 * std::log2(double(lies)) + 5)));
  const std::int64_t threshold = std::max({t1, t2, t3});
  LargeNExact r;
  r.applicable = n >= threshold;
  if (r.applicable)
    r.value = floor_div_mul(n, lies + 1, k) - 1 +
              ceil_log2(k + scaled_remainder(n, k, lies + 1));
  return r;
}

int ch_bound(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || a + b < 1)
    throw std::domain_error("ch_bound: need a, b >= 0 with a + b >= 1");
  for (int q = 0;; ++q) {
    BigUint lhs = BigUint(std::uint64_t(a)) * std::uint64_t(q + 1);
    lhs += std::uint64_t(b);
    if (lhs <= BigUint::power_of_two(std::uint32_t(q))) return q;
  }
}

ConjectureQuantities conjecture_quantities(std::int64_t a, std::int64_t b,
                                           std::int64_t k,
                                           const OneLieStateValueFn& one_lie_value) {
  if (k < 1) throw std::domain_error("conjecture_quantities: k must be >= 1");
  if (!(2 * k > a)) throw std::domain_error("conjecture_quantities: need 2k > a");
  if (a < 0 || b < 0 || a + b < 2)
    throw std::domain_error("conjecture_quantities: need a, b >= 0, a + b >= 2");

  ConjectureQuantities out;
  out.c = std::max<std::int64_t>(ch_bound(a, b), ru0k_exact(2 * a + b, k));

  auto solvable_within = [&](std::int64_t x0, std::int64_t x1) {
    return one_lie_value(GameState{{x0, x1}, 0}) <= out.c - 1;
  };

  std::optional<std::int64_t> chi0;
  for (std::int64_t x = 0; x <= std::min(a, k); ++x)
    if (solvable_within(x, a - x)) chi0 = x;
  if (!chi0)
    throw std::domain_error("conjecture_quantities: no feasible chi0");
  out.chi0 = *chi0;

  std::optional<std::int64_t> chi1;
  for (std::int64_t y = 0; y <= std::min(b, k - out.chi0); ++y)
    if (solvable_within(out.chi0, y + a - out.chi0)) chi1 = y;
  if (!chi1)
    throw std::domain_error("conjecture_quantities: no feasible chi1");
  out.chi1 = *chi1;
  return out;
}

}  // namespace liargame

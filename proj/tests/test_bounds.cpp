#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liargame/bounds.hpp"
#include "liargame/report.hpp"
#include "liargame/solver.hpp"
#include "liargame/weights.hpp"

using namespace liargame;

TEST_CASE("scaled remainders") {
  CHECK(scaled_remainder(10, 3, 1) == 1);
  CHECK(scaled_remainder(56, 16, 2) == 0);
  CHECK(scaled_remainder(7, 7, 3) == 0);
  CHECK_THROWS_AS(scaled_remainder(5, 0, 1), std::invalid_argument);
}

TEST_CASE("binomial prefix sums are exact") {
  CHECK(binom_le(5, 0) == BigUint(1));
  CHECK(binom_le(5, 1) == BigUint(6));
  CHECK(binom_le(10, 2) == BigUint(56));  // 1 + 10 + 45
  CHECK(binom_le(4, -1) == BigUint(0));
  CHECK(binom_le(3, 7) == BigUint(8));  // saturates at 2^q

  // Against an additive Pascal triangle.
  std::vector<std::vector<std::uint64_t>> pascal(40);
  for (int q = 0; q < 40; ++q) {
    pascal[q].assign(std::size_t(q) + 1, 1);
    for (int j = 1; j < q; ++j)
      pascal[q][std::size_t(j)] = pascal[q - 1][std::size_t(j - 1)] +
                                  pascal[q - 1][std::size_t(j)];
  }
  for (int q = 0; q < 40; ++q) {
    for (int terms = 0; terms <= 5; ++terms) {
      std::uint64_t expect = 0;
      for (int j = 0; j <= std::min(terms, q); ++j) expect += pascal[q][std::size_t(j)];
      CHECK(binom_le(q, terms) == BigUint(expect));
    }
  }
}

TEST_CASE("state weights") {
  CHECK(state_weight(make_state({1, 0}), 3) == BigUint(4));
  CHECK(state_weight(make_state({0, 0, 1}), 17) == BigUint(1));
  CHECK(state_weight(make_state({2, 2}), 4) == BigUint(12));
}

TEST_CASE("weight bound scans with exact arithmetic") {
  CHECK(weight_bound(8, 0) == 3);
  CHECK(weight_bound(4, 1) == 5);
  CHECK(weight_bound(2, 2) == 5);

  // Minimality on a grid: the bound is the first q passing the volume test.
  for (int lies = 0; lies <= 3; ++lies) {
    for (std::int64_t n = 1; n <= 50; ++n) {
      const int w = weight_bound(n, lies);
      CHECK(binom_le(w, lies) * std::uint64_t(n) <= BigUint::power_of_two(w));
      if (w > 0)
        CHECK(BigUint::power_of_two(w - 1) < binom_le(w - 1, lies) * std::uint64_t(n));
    }
  }
}

TEST_CASE("state weight bound") {
  CHECK(state_weight_bound(make_state({1, 0})) == 0);
  CHECK(state_weight_bound(make_state({0, 2})) == 1);
  CHECK(state_weight_bound(make_state({2, 2})) == 4);
  CHECK_THROWS_AS(state_weight_bound(make_state({0, 0})), std::invalid_argument);
  // Fresh states agree with the n-candidate bound.
  for (int lies = 0; lies <= 2; ++lies)
    for (std::int64_t n = 1; n <= 32; ++n)
      CHECK(state_weight_bound(start_state(lies, n)) == weight_bound(n, lies));
}

TEST_CASE("ceil_log2 is the bit length of x-1") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(1 << 20) == 20);
  CHECK(ceil_log2((1 << 20) + 1) == 21);
}

TEST_CASE("no-lie closed form") {
  CHECK(ru0k_exact(10, 3) == 4);
  CHECK(ru0k_exact(64, 16) == 7);
  CHECK(ru0k_exact(8, 8) == 3);
  CHECK_THROWS_AS(ru0k_exact(8, 9), std::domain_error);
}

TEST_CASE("single-element-question closed form") {
  CHECK(ruk1_exact(5, 0) == 4);
  CHECK(ruk1_exact(3, 1) == 5);
  CHECK(ruk1_exact(2, 2) == 5);
}

TEST_CASE("logarithmic estimate band") {
  const EstimateBand b1 = ru_estimate(2, 1);
  CHECK(b1.lower == doctest::Approx(2.0));
  CHECK(b1.upper == doctest::Approx(5.0));
  const EstimateBand b2 = ru_estimate(8, 2);
  CHECK(b2.lower == doctest::Approx(5.0));
  CHECK_THROWS_AS(ru_estimate(1, 1), std::domain_error);
  CHECK_THROWS_AS(ru_estimate(4, 0), std::domain_error);
}

namespace {

BasicValueFn solver_basic(Solver& solver) {
  return [&solver](int lies, std::int64_t n) {
    return solver.value_basic(start_state(lies, n), lies);
  };
}

}  // namespace

TEST_CASE("lower bound family on hand-checked instances") {
  Solver solver;
  const auto basic = solver_basic(solver);

  // lies=0 collapses to the no-lie formula with ceil(log2 k).
  CHECK(bound_l(14, 2, 0, basic) == 14 / 2 - 1 + ceil_log2(2));
  CHECK(bound_l(31, 5, 0, basic) == 31 / 5 - 1 + ceil_log2(5));

  // n=14, k=2, lies=1: max{6 + RU_1(2), 14} with RU_1(2) = 3.
  CHECK(basic(1, 2) == 3);
  CHECK(bound_l(14, 2, 1, basic) == 14);

  CHECK(bound_l_hat(14, 2, 1) == 14);  // max{6 + 3, 13 + 1}
  CHECK(bound_l_hat(14, 2, 0) == bound_l(14, 2, 0, basic));

  BasicStateValueFn basic_state = [&solver](int lies, const GameState& s) {
    return solver.value_basic(s, lies);
  };
  // p=1 term: floor(28/2) - 1 + RU_0(2 + m_2) with m_2 = 0.
  CHECK(bound_l_tilde(14, 2, 1, basic_state) == 14);

  CHECK_THROWS_AS(bound_l(14, 7, 1, basic), std::domain_error);
  CHECK_THROWS_AS(bound_l(14, 1, 1, basic), std::domain_error);
}

TEST_CASE("large-n exact formula thresholds") {
  // k=2, lies=1: thresholds are max{12, 14, 12} = 14.
  CHECK_FALSE(large_n_exact(13, 2, 1).applicable);
  const LargeNExact at14 = large_n_exact(14, 2, 1);
  CHECK(at14.applicable);
  CHECK(at14.value == 14);
  for (std::int64_t n = 14; n <= 20; ++n) {
    const LargeNExact t = large_n_exact(n, 2, 1);
    CHECK(t.applicable);
    CHECK(t.value == n);  // m_2 = 0, so floor(2n/2) - 1 + 1 = n
  }
  // k=16, lies=1: 56 < 16*(1+5) = 96.
  CHECK_FALSE(large_n_exact(56, 16, 1).applicable);
  CHECK_THROWS_AS(large_n_exact(56, 16, 0), std::domain_error);
}

TEST_CASE("conjecture quantities on the published instance") {
  CHECK(ch_bound(10, 44) == 7);  // 8*10+44 = 124 <= 128; q=6 fails
  Solver solver;
  const Params params{1, 16};
  const auto cq = conjecture_quantities(10, 44, 16, [&](const GameState& s) {
    return solver.value(s, params);
  });
  CHECK(cq.c == 7);
  CHECK(cq.chi0 == 8);
  CHECK(cq.chi1 == 6);
  CHECK_THROWS_AS(
      conjecture_quantities(40, 4, 16, [](const GameState&) { return 0; }),
      std::domain_error);
}

TEST_CASE("bound report serialization") {
  Solver solver;
  const BoundReport r = make_bound_report(14, 2, 1, solver);
  CHECK(r.exact.has_value());
  CHECK(*r.exact == 14);
  CHECK(r.theorem2_applicable);
  CHECK(r.theorem2_value == 14);
  const std::string json = r.to_json();
  CHECK(json ==
        "{\"n\":14,\"k\":2,\"lies\":1,\"l\":14,\"l_plus\":14,\"l_hat\":14,"
        "\"l_tilde\":14,\"theorem2_applicable\":true,\"theorem2_value\":14,"
        "\"exact\":14}");

  // Optionals render as nulls.
  ReportOptions skip;
  skip.with_exact = false;
  skip.with_l_tilde = false;
  const BoundReport bare = make_bound_report(14, 2, 1, solver, skip);
  const std::string bare_json = bare.to_json();
  CHECK(bare_json.find("\"l_tilde\":null") != std::string::npos);
  CHECK(bare_json.find("\"exact\":null") != std::string::npos);
  CHECK(BoundReport::csv_header() ==
        "n,k,lies,l,l_plus,l_hat,l_tilde,theorem2_applicable,theorem2_value,exact");
  CHECK(bare.to_csv_row() == "14,2,1,14,14,14,,true,14,");
}

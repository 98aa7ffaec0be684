#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "liargame/bigint.hpp"

using liargame::BigUint;

TEST_CASE("small values behave like native integers") {
  CHECK(BigUint{}.is_zero());
  CHECK(BigUint(0) == BigUint{});
  CHECK(BigUint(7).str() == "7");
  CHECK((BigUint(3) + BigUint(4)) == BigUint(7));
  CHECK((BigUint(1000000007) * 33) == BigUint(33000000231ull));
  CHECK(BigUint(5) < BigUint(6));
  CHECK(BigUint(6) <= BigUint(6));
}

TEST_CASE("powers of two and bit lengths") {
  CHECK(BigUint::power_of_two(0) == BigUint(1));
  CHECK(BigUint::power_of_two(10) == BigUint(1024));
  CHECK(BigUint::power_of_two(64).bit_length() == 65);
  CHECK(BigUint::power_of_two(200).str() ==
        "1606938044258990275541962092341162602522202993782792835301376");
  // Strictly between adjacent powers.
  BigUint x = BigUint::power_of_two(100);
  x += 1;
  CHECK(BigUint::power_of_two(100) < x);
  CHECK(x < BigUint::power_of_two(101));
}

TEST_CASE("division by a small divisor returns the remainder") {
  BigUint x = BigUint::power_of_two(100);  // 2^100
  CHECK(x.div_mod(3) == 1);                // 2^100 mod 3 == 1
  BigUint y = BigUint(123456789) * 1000000000ull;
  y += 987654321;
  CHECK(y.str() == "123456789987654321");
  CHECK(y.div_mod(10) == 1);
  CHECK(y.str() == "12345678998765432");
}

TEST_CASE("random add/mul agree with 128-bit arithmetic") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::uint64_t a = rng() >> (rng() % 32);
    const std::uint64_t b = rng() >> (rng() % 32);
    const std::uint32_t f = std::uint32_t(rng());
    unsigned __int128 ref = (unsigned __int128)(a) + b;
    BigUint sum = BigUint(a) + BigUint(b);
    CHECK(sum.low_u64() == std::uint64_t(ref));

    ref = (unsigned __int128)(a)*f;
    BigUint prod = BigUint(a) * f;
    CHECK(prod.low_u64() == std::uint64_t(ref));
    if (f != 0) {
      BigUint q = prod;
      CHECK(q.div_mod(f) == 0);
      CHECK(q == BigUint(a));
    }
  }
}

TEST_CASE("comparison is total and consistent with addition") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    BigUint a = BigUint(rng()) * rng();
    BigUint b = BigUint(rng()) * rng();
    BigUint c = a + b;
    if (!b.is_zero()) CHECK(a < c);
    CHECK((a < b) == !(b <= a));
  }
}

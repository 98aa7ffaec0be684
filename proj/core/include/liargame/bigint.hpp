#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace liargame {

// Unsigned arbitrary-precision integer, just big enough for the exact
// volume-bound scans: addition, multiplication and exact division by a
// 64-bit factor, powers of two, and comparison. Values near powers of two
// must compare exactly, so no floating point anywhere.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // implicit by design: 1, n, ... all convert

  static BigUint power_of_two(std::uint32_t exponent);

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator*=(std::uint64_t factor);
  // In-place division by a nonzero 64-bit divisor; returns the remainder.
  std::uint64_t div_mod(std::uint64_t divisor);

  bool is_zero() const { return limbs_.empty(); }
  std::uint32_t bit_length() const;
  // Low 64 bits; used by tests to cross-check against native arithmetic.
  std::uint64_t low_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }
  std::string str() const;  // decimal

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator*(BigUint lhs, std::uint64_t factor) {
    lhs *= factor;
    return lhs;
  }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);
  friend bool operator==(const BigUint& a, const BigUint& b) = default;

 private:
  void trim();

  // Little-endian base-2^64 limbs, no trailing zero limbs (zero is empty).
  std::vector<std::uint64_t> limbs_;
};

}  // namespace liargame

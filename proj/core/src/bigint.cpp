#include "liargame/bigint.hpp"

#include <algorithm>
#include <bit>

namespace liargame {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint::BigUint(u64 value) {
  if (value != 0) limbs_.push_back(value);
}

BigUint BigUint::power_of_two(std::uint32_t exponent) {
  BigUint r;
  r.limbs_.assign(exponent / 64 + 1, 0);
  r.limbs_.back() = u64(1) << (exponent % 64);
  return r;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sum = u128(limbs_[i]) + carry;
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = u64(sum);
    carry = u64(sum >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator*=(u64 factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  u64 carry = 0;
  for (auto& limb : limbs_) {
    u128 prod = u128(limb) * factor + carry;
    limb = u64(prod);
    carry = u64(prod >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

u64 BigUint::div_mod(u64 divisor) {
  u64 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (u128(rem) << 64) | limbs_[i];
    limbs_[i] = u64(cur / divisor);
    rem = u64(cur % divisor);
  }
  trim();
  return rem;
}

std::uint32_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return std::uint32_t(64 * (limbs_.size() - 1)) + std::uint32_t(std::bit_width(limbs_.back()));
}

std::string BigUint::str() const {
  if (limbs_.empty()) return "0";
  // Peel off 19 decimal digits at a time.
  constexpr u64 chunk = 10'000'000'000'000'000'000ull;
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    u64 part = tmp.div_mod(chunk);
    std::string digits = std::to_string(part);
    if (!tmp.is_zero()) digits.insert(0, 19 - digits.size(), '0');
    out.insert(0, digits);
  }
  return out;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace liargame

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rvt {

// Unsigned exact integer, base 1e9 limbs.  Word counts grow roughly
// fourfold per level, which leaves 64 bits around level 30; counting must
// stay exact at any requested level.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT: implicit by design

  BigUint& operator+=(const BigUint& other);
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  BigUint& mul_small(std::uint32_t factor);

  bool is_zero() const { return limbs_.empty(); }
  std::string to_string() const;

  friend bool operator==(const BigUint&, const BigUint&) = default;
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;
  // Little endian, no trailing zero limbs; empty means zero.
  std::vector<std::uint32_t> limbs_;
};

}  // namespace rvt

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace wiener {

// floor(sqrt(x)) for x >= 0, exact.
constexpr std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw std::domain_error("isqrt of negative value");
  if (x < 2) return x;
  // Newton iteration from above converges monotonically to the floor.
  std::int64_t r = x;
  std::int64_t next = (r + x / r) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

constexpr bool is_perfect_square(std::int64_t x) {
  if (x < 0) return false;
  const std::int64_t r = isqrt(x);
  return r * r == x;
}

// Halves a value known to be even; throws otherwise.
constexpr std::int64_t exact_half(std::int64_t twice) {
  if (twice % 2 != 0) throw std::logic_error("halved quantity is not an integer");
  return twice / 2;
}

constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace wiener

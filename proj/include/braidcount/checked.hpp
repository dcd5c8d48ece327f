#ifndef BRAIDCOUNT_CHECKED_HPP
#define BRAIDCOUNT_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace braidcount {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("64-bit addition overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(x, y, &out)) throw std::overflow_error("64-bit subtraction overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("64-bit multiplication overflow");
  return out;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_CHECKED_HPP

#pragma once

#include <cstdint>

#include "dissecta/error.hpp"

namespace dissecta {

// 64-bit arithmetic that aborts the computation with Errc::overflow instead
// of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(Errc::overflow, "integer overflow in addition");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(Errc::overflow, "integer overflow in subtraction");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(Errc::overflow, "integer overflow in multiplication");
  }
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace dissecta

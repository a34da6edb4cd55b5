#pragma once

#include <stdexcept>

namespace detthick {

// Size arithmetic on machine integers; dimensions use BigInt instead.
inline long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return out;
}

inline long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return out;
}

}  // namespace detthick

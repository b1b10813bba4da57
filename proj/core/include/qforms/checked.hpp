#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qforms/errors.hpp"

namespace qf {

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_range_error("add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_range_error("sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_range_error("mul");
  return r;
}

inline i64 checked_neg(i64 a) {
  if (a == std::numeric_limits<i64>::min()) throw arithmetic_range_error("neg");
  return -a;
}

// Widening product, never overflows.
inline i128 wide_mul(i64 a, i64 b) { return static_cast<i128>(a) * b; }

inline i128 checked_add128(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_range_error("add128");
  return r;
}

inline i128 checked_sub128(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_range_error("sub128");
  return r;
}

inline i128 checked_mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_range_error("mul128");
  return r;
}

inline i64 narrow_i64(i128 v) {
  if (v > static_cast<i128>(std::numeric_limits<i64>::max()) ||
      v < static_cast<i128>(std::numeric_limits<i64>::min()))
    throw arithmetic_range_error("narrow to 64-bit");
  return static_cast<i64>(v);
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

std::string to_string_i128(i128 v);

// Floor of sqrt(v), exact. v must be nonnegative.
inline i64 isqrt_floor(i64 v) {
  if (v < 0) throw invalid_input_error("isqrt of negative");
  if (v == 0) return 0;
  i64 s = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && wide_mul(s, s) > v) --s;
  while (wide_mul(s + 1, s + 1) <= v) ++s;
  return s;
}

i128 isqrt_floor128(i128 v);

inline bool is_perfect_square(i64 v, i64* root = nullptr) {
  if (v < 0) return false;
  i64 s = isqrt_floor(v);
  if (wide_mul(s, s) != v) return false;
  if (root) *root = s;
  return true;
}

inline bool is_perfect_square128(i128 v, i128* root = nullptr) {
  if (v < 0) return false;
  i128 s = isqrt_floor128(v);
  if (s * s != v) return false;
  if (root) *root = s;
  return true;
}

}  // namespace qf

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rbsym {

/// Exact signed coefficient type used for counts and QSym coefficients.
using Integer = std::int64_t;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact computation left the range of the coefficient type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A size limit (vertex cap, enumeration cap, memo capacity) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An argument violated an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

namespace checked {

template <class T>
[[nodiscard]] inline T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <class T>
[[nodiscard]] inline T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <class T>
[[nodiscard]] inline T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

[[nodiscard]] inline Integer factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r = mul<Integer>(r, k);
  return r;
}

}  // namespace checked

/// Decimal rendering of a 128-bit integer (std::to_string has no overload for it).
[[nodiscard]] inline std::string to_string_i128(__int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with negative values so that the minimum value is representable.
  std::string digits;
  __int128 x = negative ? v : -v;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace rbsym

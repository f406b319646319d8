#ifndef WEYLMULT_NUMERIC_HPP
#define WEYLMULT_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace weylmult {

// Counts (dimensions, multiplicities, coefficients) are arbitrary precision.
// Exponents and weight coordinates are 64-bit with checked arithmetic.
using BigInt = mpz_class;
using BigRat = mpq_class;

/// Thrown when a computation exceeds a configured resource cap.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coordinate arithmetic overflow (add)");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("coordinate arithmetic overflow (sub)");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coordinate arithmetic overflow (mul)");
  return r;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace weylmult

#endif

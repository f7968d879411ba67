#include "srd/exact.hpp"

#include <limits>

#include "srd/error.hpp"

namespace srd {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::int64_t to_int64(const BigInt& value, const std::string& what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::TooLarge, what + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& value, const std::string& what) {
  if (!is_integral(value)) {
    throw Error(ErrorKind::NonIntegral, what + " = " + to_string(value));
  }
  return to_int64(BigInt(boost::multiprecision::numerator(value)), what);
}

std::string to_string(const Rational& value) {
  if (is_integral(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::TooLarge, "64-bit counter overflow");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::TooLarge, "64-bit counter overflow");
  }
  return out;
}

}  // namespace srd

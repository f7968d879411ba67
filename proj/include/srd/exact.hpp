#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace srd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);

bool is_integral(const Rational& value);

// Throws NonIntegral when the value has a nontrivial denominator.
std::int64_t to_int64(const Rational& value, const std::string& what);
std::int64_t to_int64(const BigInt& value, const std::string& what);

std::string to_string(const Rational& value);

// Checked 64-bit helpers for runtime counters.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace srd

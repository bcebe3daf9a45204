#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace tquot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ceiling of num/den for num >= 0, den > 0.
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

/// Binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace tquot

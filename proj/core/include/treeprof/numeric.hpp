#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace treeprof {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, r); zero when r > n.
BigInt binomial(std::uint64_t n, std::uint64_t r);

/// Same as binomial() but in 64 bits; caller guarantees no overflow.
constexpr std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

BigInt factorial(std::uint64_t n);

}  // namespace treeprof

#include "treeprof/numeric.hpp"

namespace treeprof {

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

BigInt factorial(std::uint64_t n) {
  BigInt acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace treeprof

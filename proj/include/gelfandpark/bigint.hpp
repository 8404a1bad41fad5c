#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gelfandpark {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;  // exact: b is C(n-k+i, i) after this step
  }
  return b;
}

inline BigInt catalan(std::uint64_t n) { return binomial(2 * n, n) / (n + 1); }

inline BigInt power(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

// n! / prod(parts_i!) with n = sum(parts), built as a product of binomials so
// no intermediate exceeds the result by more than a factor of n.
template <typename Int>
BigInt multinomial_of(std::span<Int const> parts) {
  BigInt result = 1;
  std::uint64_t total = 0;
  for (auto p : parts) {
    auto const part = static_cast<std::uint64_t>(p);
    total += part;
    result *= binomial(total, part);
  }
  return result;
}

inline std::string to_string(BigInt const& v) { return v.str(); }

}  // namespace gelfandpark

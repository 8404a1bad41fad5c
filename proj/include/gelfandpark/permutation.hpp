#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"

namespace gelfandpark {

// A permutation of {0, ..., n-1} in one-line notation: perm[i] = sigma(i).
using Perm = std::vector<std::uint32_t>;

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline bool is_permutation(std::span<std::uint32_t const> p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// (a * b)(i) = a(b(i)): b acts first.
inline Perm compose(std::span<std::uint32_t const> a,
                    std::span<std::uint32_t const> b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm inverse(std::span<std::uint32_t const> a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

// Moves the entry at position i to position sigma(i), so that
// result[j] = values[sigma^{-1}(j)].
template <typename T>
std::vector<T> permute_positions(std::span<std::uint32_t const> sigma,
                                 std::span<T const> values) {
  std::vector<T> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[sigma[i]] = values[i];
  return out;
}

// Lexicographic rank of p among all permutations of its length.
inline std::uint64_t rank_perm(std::span<std::uint32_t const> p) {
  std::uint64_t rank = 0;
  std::size_t const n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

inline Perm unrank_perm(std::size_t n, std::uint64_t rank) {
  std::vector<std::uint64_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t const radix = n - i;
    digits[i] = rank % radix;
    rank /= radix;
  }
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return p;
}

// All permutations of {0..n-1} in lexicographic order.
inline std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<std::uint32_t>> cycles_of(
    std::span<std::uint32_t const> p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    auto& cyc = out.emplace_back();
    for (std::uint32_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
  }
  return out;
}

// Cycle lengths in weakly decreasing order.
inline std::vector<std::uint32_t> cycle_type(std::span<std::uint32_t const> p) {
  std::vector<std::uint32_t> type;
  for (auto const& c : cycles_of(p)) type.push_back(static_cast<std::uint32_t>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

inline bool is_even(std::span<std::uint32_t const> p) {
  std::size_t transpositions = 0;
  for (auto const& c : cycles_of(p)) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

// Adjacent transposition (i i+1) on n points.
inline Perm adjacent_transposition(std::size_t n, std::size_t i) {
  Perm p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

}  // namespace gelfandpark

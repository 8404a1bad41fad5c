#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/container/static_vector.hpp>

#include "bigint.hpp"
#include "errors.hpp"
#include "groups.hpp"

namespace gelfandpark {

// Short sequences of small non-negative integers, stored inline. Every
// enumeration in this header is capped at length 12.
using SmallSeq = boost::container::static_vector<std::uint8_t, 16>;

inline std::vector<std::uint32_t> widen(SmallSeq const& s) {
  return {s.begin(), s.end()};
}

inline std::string to_string(SmallSeq const& s) {
  std::string out;
  for (auto v : s) out += std::to_string(v);
  return out;
}

inline std::strong_ordering compare(SmallSeq const& a, SmallSeq const& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// Entries are 1-based, as in the usual definition.
struct ParkingFunction {
  SmallSeq entries;
  friend bool operator==(ParkingFunction const&, ParkingFunction const&) = default;
  friend std::strong_ordering operator<=>(ParkingFunction const& a, ParkingFunction const& b) {
    return compare(a.entries, b.entries);
  }
};

struct BallotSequence {
  SmallSeq entries;
  friend bool operator==(BallotSequence const&, BallotSequence const&) = default;
  friend std::strong_ordering operator<=>(BallotSequence const& a, BallotSequence const& b) {
    return compare(a.entries, b.entries);
  }
};

// Sorted residues mod n+1.
struct ZeroSumMultiset {
  SmallSeq residues;
  friend bool operator==(ZeroSumMultiset const&, ZeroSumMultiset const&) = default;
  friend std::strong_ordering operator<=>(ZeroSumMultiset const& a, ZeroSumMultiset const& b) {
    return compare(a.residues, b.residues);
  }
};

struct OrbitEntry {
  ParkingFunction representative;  // the non-decreasing member
  std::uint64_t size;
};

namespace detail {
inline void guard_length(std::size_t n, std::size_t max, char const* what) {
  if (n < 1) throw invalid_input(std::string(what) + ": n must be >= 1");
  if (n > max)
    throw budget_exceeded(std::string(what) + ": n above enumeration guard", n, max);
}
}  // namespace detail

template <typename Int>
bool is_parking_function(std::span<Int const> a) {
  std::vector<long long> b(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] < 1 || b[i] > static_cast<long long>(i + 1)) return false;
  return true;
}

inline bool is_parking_function(std::vector<long long> const& a) {
  return is_parking_function(std::span<long long const>(a));
}

inline bool is_parking_function(ParkingFunction const& a) {
  return is_parking_function(std::span<std::uint8_t const>(a.entries.data(), a.entries.size()));
}

// All parking functions of length n in lexicographic order. The search only
// descends into prefixes that still admit a completion: with m slots left,
// #{entries <= j} + m >= j must hold for every j.
inline std::vector<ParkingFunction> enumerate_parking_functions(std::size_t n) {
  detail::guard_length(n, 8, "enumerate_parking_functions");
  std::vector<ParkingFunction> out;
  std::vector<std::uint32_t> count(n + 2, 0);
  ParkingFunction cur;
  auto feasible = [&](std::size_t remaining) {
    std::uint32_t le = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      le += count[j];
      if (le + remaining < j) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (cur.entries.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint8_t v = 1; v <= n; ++v) {
      cur.entries.push_back(v);
      ++count[v];
      if (feasible(n - cur.entries.size())) self(self);
      --count[v];
      cur.entries.pop_back();
    }
  };
  rec(rec);
  return out;
}

// a -> (a_i - 1 mod n+1), as a canonical point of Z_{n+1}^n / diagonal.
inline std::vector<Elem> pollak_map(ParkingFunction const& a) {
  detail::require(!a.entries.empty() && is_parking_function(a),
                  "pollak_map: not a parking function");
  auto const n = static_cast<Elem>(a.entries.size());
  std::vector<Elem> x(n);
  Elem const shift = (a.entries[0] - 1u) % (n + 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = (a.entries[i] - 1u + (n + 1) - shift) % (n + 1);
  return x;
}

// Finds the unique diagonal shift c such that (x_i + c mod n+1) + 1 is a
// parking function. x may be any representative of its coset.
inline ParkingFunction pollak_inverse(std::span<Elem const> x) {
  auto const n = static_cast<Elem>(x.size());
  detail::require(n >= 1 && n <= 12, "pollak_inverse: length must be 1..12");
  for (Elem v : x) detail::require(v <= n, "pollak_inverse: residue out of range");
  std::vector<ParkingFunction> hits;
  for (Elem c = 0; c <= n; ++c) {
    ParkingFunction a;
    for (Elem v : x) a.entries.push_back(static_cast<std::uint8_t>((v + c) % (n + 1) + 1));
    if (is_parking_function(a)) hits.push_back(a);
  }
  if (hits.size() != 1)
    throw invariant_violation("pollak_inverse: " + std::to_string(hits.size()) +
                              " diagonal shifts give parking functions");
  return hits.front();
}

// One entry per S_n-orbit, keyed by its non-decreasing member (1 <= b_i <= i),
// in lexicographic order. Orbit size is n! / prod(multiplicity!).
inline std::vector<OrbitEntry> orbit_decomposition(std::size_t n) {
  detail::guard_length(n, 8, "orbit_decomposition");
  std::vector<OrbitEntry> out;
  ParkingFunction cur;
  auto rec = [&](auto&& self) -> void {
    std::size_t const i = cur.entries.size();
    if (i == n) {
      std::vector<std::uint32_t> mult(n + 1, 0);
      for (auto v : cur.entries) ++mult[v];
      out.push_back({cur, multinomial_of(std::span<std::uint32_t const>(mult))
                              .convert_to<std::uint64_t>()});
      return;
    }
    std::uint8_t const lo = i == 0 ? 1 : cur.entries.back();
    for (std::uint8_t v = lo; v <= i + 1; ++v) {
      cur.entries.push_back(v);
      self(self);
      cur.entries.pop_back();
    }
  };
  rec(rec);
  return out;
}

// b in N^n with every prefix sum b_1 + ... + b_j >= j and total n, in
// lexicographic order.
inline std::vector<BallotSequence> enumerate_ballot_sequences(std::size_t n) {
  detail::guard_length(n, 12, "enumerate_ballot_sequences");
  std::vector<BallotSequence> out;
  BallotSequence cur;
  auto rec = [&](auto&& self, std::size_t sum) -> void {
    std::size_t const j = cur.entries.size() + 1;
    if (j == n) {
      cur.entries.push_back(static_cast<std::uint8_t>(n - sum));
      out.push_back(cur);
      cur.entries.pop_back();
      return;
    }
    std::size_t const lo = sum >= j ? 0 : j - sum;
    for (std::size_t b = lo; sum + b <= n; ++b) {
      cur.entries.push_back(static_cast<std::uint8_t>(b));
      self(self, sum + b);
      cur.entries.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// n-element multisets on Z_{n+1} summing to 0, as sorted residue sequences
// in lexicographic order.
inline std::vector<ZeroSumMultiset> enumerate_zero_sum_multisets(std::size_t n) {
  detail::guard_length(n, 12, "enumerate_zero_sum_multisets");
  std::vector<ZeroSumMultiset> out;
  ZeroSumMultiset cur;
  auto rec = [&](auto&& self, std::size_t sum) -> void {
    if (cur.residues.size() == n) {
      if (sum % (n + 1) == 0) out.push_back(cur);
      return;
    }
    std::uint8_t const lo = cur.residues.empty() ? 0 : cur.residues.back();
    for (std::uint8_t v = lo; v <= n; ++v) {
      cur.residues.push_back(v);
      self(self, sum + v);
      cur.residues.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace gelfandpark

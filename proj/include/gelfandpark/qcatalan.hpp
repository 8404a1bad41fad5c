#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "budget.hpp"
#include "errors.hpp"
#include "parking.hpp"
#include "polynomial.hpp"

namespace gelfandpark {

// k = (k_0, ..., k_{r-1}): k_i parts of size i in the partition
// lambda_k = (0^{k_0}, 1^{k_1}, ..., (r-1)^{k_{r-1}}), with n = sum k_i parts.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::uint32_t> counts) : k_(std::move(counts)) {
    detail::require(!k_.empty(), "weight vector needs at least one entry");
  }

  // Rejects vectors whose entries do not sum to n.
  static WeightVector with_total(std::vector<std::uint32_t> counts, std::size_t n) {
    WeightVector k(std::move(counts));
    if (k.n() != n)
      throw invalid_input("weight vector entries sum to " + std::to_string(k.n()) +
                          ", expected " + std::to_string(n));
    return k;
  }

  // "0,0,0,2,3"
  static WeightVector parse(std::string_view text) {
    std::vector<std::uint32_t> k;
    std::string cur;
    auto flush = [&] {
      if (cur.empty() || cur.size() > 6 ||
          !std::all_of(cur.begin(), cur.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw invalid_input("malformed weight vector: " + std::string(text));
      k.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
      cur.clear();
    };
    for (char c : text) {
      if (c == ' ' || c == '(' || c == ')') continue;
      if (c == ',') flush();
      else cur.push_back(c);
    }
    flush();
    return WeightVector(std::move(k));
  }

  // Appends zero counts up to length r.
  WeightVector padded(std::size_t r) const {
    detail::require(r >= k_.size(), "cannot pad a weight vector to a shorter length");
    auto k = k_;
    k.resize(r, 0);
    return WeightVector(std::move(k));
  }

  std::span<std::uint32_t const> counts() const noexcept { return k_; }
  std::uint32_t operator[](std::size_t i) const { return k_[i]; }
  std::size_t r() const noexcept { return k_.size(); }
  std::size_t n() const noexcept {
    std::size_t s = 0;
    for (auto v : k_) s += v;
    return s;
  }
  std::uint64_t weighted_sum() const noexcept {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < k_.size(); ++i) s += i * k_[i];
    return s;
  }

  // lambda_k in weakly decreasing order, zeros included (exactly n parts).
  std::vector<std::uint32_t> partition() const {
    std::vector<std::uint32_t> lambda;
    for (std::size_t i = k_.size(); i-- > 0;)
      lambda.insert(lambda.end(), k_[i], static_cast<std::uint32_t>(i));
    return lambda;
  }

  bool is_trivial() const noexcept { return n() == k_[0]; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < k_.size(); ++i) s += (i ? "," : "") + std::to_string(k_[i]);
    return s;
  }

  friend auto operator<=>(WeightVector const&, WeightVector const&) = default;

 private:
  std::vector<std::uint32_t> k_;
};

inline BigInt multinomial(WeightVector const& k) { return multinomial_of(k.counts()); }

namespace detail {

// Visits every composition of n into r parts in colexicographic order
// (compare k_{r-1} first, then k_{r-2}, ...), passing the weighted sum
// mod r alongside.
template <typename Visit>
void for_each_composition(std::size_t n, std::size_t r, Visit&& visit) {
  std::vector<std::uint32_t> k(r, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left, std::uint64_t wsum) -> void {
    if (pos == 0) {
      k[0] = static_cast<std::uint32_t>(left);
      visit(k, wsum % r);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      k[pos] = static_cast<std::uint32_t>(v);
      self(self, pos - 1, left - v, wsum + pos * v);
    }
    k[pos] = 0;
  };
  rec(rec, r - 1, n, 0);
}

inline void guard_compositions(std::size_t n, std::size_t r, Budget const& budget) {
  BigInt const count = binomial(n + r - 1, r - 1);
  if (count > budget.elements)
    throw budget_exceeded("weight-vector enumeration: composition count exceeds budget",
                          count > BigInt(~0ull) ? ~0ull : count.convert_to<std::uint64_t>(),
                          budget.elements);
}

}  // namespace detail

// All k in N^r with sum n and r | sum i k_i, colexicographic. With r = n+1
// this is D(n).
inline std::vector<WeightVector> enumerate_weight_vectors(std::size_t n, std::size_t r,
                                                          Budget const& budget = {}) {
  detail::require(n >= 1 && r >= 1, "enumerate_weight_vectors: n, r must be >= 1");
  detail::guard_compositions(n, r, budget);
  std::vector<WeightVector> out;
  detail::for_each_composition(n, r, [&](std::vector<std::uint32_t> const& k, std::uint64_t res) {
    if (res == 0) out.emplace_back(k);
  });
  return out;
}

// C_n(q) = sum over D(n) of q^{multinomial(k)}.
inline SparsePolynomial cq_polynomial(std::size_t n) {
  detail::guard_length(n, 12, "cq_polynomial");
  SparsePolynomial p;
  for (auto const& k : enumerate_weight_vectors(n, n + 1)) p.add_term(multinomial(k), 1);
  return p;
}

// S_n(q) = sum over ballot sequences b of q^{n! / prod b_i!}.
inline SparsePolynomial sq_polynomial(std::size_t n) {
  detail::guard_length(n, 12, "sq_polynomial");
  SparsePolynomial p;
  for (auto const& b : enumerate_ballot_sequences(n))
    p.add_term(multinomial_of(std::span<std::uint8_t const>(b.entries.data(), b.entries.size())), 1);
  return p;
}

struct ConjectureCheck {
  bool holds;
  std::optional<BigInt> first_exponent;  // smallest exponent that differs
  BigInt c_coefficient = 0;
  BigInt s_coefficient = 0;
};

inline ConjectureCheck verify_conjecture(std::size_t n) {
  auto const c = cq_polynomial(n);
  auto const s = sq_polynomial(n);
  ConjectureCheck out{c == s, first_difference(c, s)};
  if (out.first_exponent) {
    out.c_coefficient = c.coefficient(*out.first_exponent);
    out.s_coefficient = s.coefficient(*out.first_exponent);
  }
  return out;
}

struct PowerIdentityCheck {
  bool holds;
  BigInt sum;       // sum of multinomials over the weight vectors
  BigInt expected;  // r^{n-1}
};

// r^{n-1} = sum of multinomial(k) over k with sum n and r | sum i k_i.
inline PowerIdentityCheck check_r_power_identity(std::size_t n, std::size_t r,
                                                 Budget const& budget = {}) {
  detail::require(n >= 1 && r >= 1, "check_r_power_identity: n, r must be >= 1");
  PowerIdentityCheck out{false, 0, power(r, n - 1)};
  for (auto const& k : enumerate_weight_vectors(n, r, budget)) out.sum += multinomial(k);
  out.holds = out.sum == out.expected;
  return out;
}

}  // namespace gelfandpark

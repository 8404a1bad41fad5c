#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "parking.hpp"
#include "permutation.hpp"
#include "qcatalan.hpp"

namespace gelfandpark {

// ---------------------------------------------------------------------------
// Monomial modules CM(k) of Z_r wr S_n

// Basis: the distinct arrangements a of lambda_k, each standing for the
// monomial x_1^{a_1} ... x_n^{a_n}, sorted lexicographically.
//
// (g; sigma) sends x^a to xi^{-sum_i g_{sigma(i)} a_i} x^{sigma.a}, where
// (sigma.a)_j = a_{sigma^{-1}(j)}. This is a homomorphism for the product
// law of WreathProduct; the character is the trace of that monomial matrix.
class MonomialModule {
 public:
  explicit MonomialModule(WeightVector k) : k_(std::move(k)) {
    auto a = k_.partition();
    std::sort(a.begin(), a.end());
    do {
      basis_.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
  }

  WeightVector const& weights() const noexcept { return k_; }
  std::size_t r() const noexcept { return k_.r(); }
  std::size_t n() const noexcept { return k_.n(); }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::vector<std::vector<std::uint32_t>> const& basis() const noexcept { return basis_; }

  std::size_t index_of(std::span<std::uint32_t const> a) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), a,
                               [](auto const& x, auto const& y) {
                                 return std::lexicographical_compare(x.begin(), x.end(),
                                                                     y.begin(), y.end());
                               });
    if (it == basis_.end() || !std::equal(it->begin(), it->end(), a.begin(), a.end()))
      throw invalid_input("not an arrangement of lambda_k");
    return static_cast<std::size_t>(it - basis_.begin());
  }

  struct Image {
    std::size_t target;   // basis index of the image monomial
    std::int64_t power;   // scalar is xi^power
  };

  // Column `basis_index` of the monomial matrix of (g; sigma).
  Image act(std::span<Elem const> g, std::span<std::uint32_t const> sigma,
            std::size_t basis_index) const {
    auto const& a = basis_[basis_index];
    std::vector<std::uint32_t> b(a.size());
    std::int64_t e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      b[sigma[i]] = a[i];
      e -= static_cast<std::int64_t>(g[sigma[i]]) * a[i];
    }
    return {index_of(b), e};
  }

  void validate_element(std::span<Elem const> g, std::span<std::uint32_t const> sigma) const {
    detail::require(g.size() == n(), "group element has the wrong length");
    detail::require(sigma.size() == n() && is_permutation(sigma), "sigma is not a permutation of n points");
    for (auto v : g) detail::require(v < r(), "residue out of range");
  }

 private:
  WeightVector k_;
  std::vector<std::vector<std::uint32_t>> basis_;
};

inline BigInt module_dimension(WeightVector const& k) { return multinomial(k); }

inline BigInt module_dimension(WeightVector const& k, std::size_t n) {
  if (k.n() != n)
    throw invalid_input("sum of k_i is " + std::to_string(k.n()) + ", must equal n = " +
                        std::to_string(n));
  return multinomial(k);
}

// Trace of (g; sigma) on CM(k): sum over arrangements fixed by sigma of
// xi^{-sum_i g_{sigma(i)} a_i}.
inline Cyclotomic character_value(MonomialModule const& m, std::span<Elem const> g,
                                  std::span<std::uint32_t const> sigma) {
  m.validate_element(g, sigma);
  Cyclotomic chi(static_cast<std::uint32_t>(m.r()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto const img = m.act(g, sigma, i);
    if (img.target == i) chi.add_power(img.power);
  }
  return chi;
}

inline Cyclotomic character_value(WeightVector const& k, std::span<Elem const> g,
                                  std::span<std::uint32_t const> sigma) {
  return character_value(MonomialModule(k), g, sigma);
}

// The diagonal subgroup acts on CM(k) by xi^{-j sum lambda_i}; trivially iff
// r divides sum i k_i.
inline bool descends_to_quotient(WeightVector const& k) {
  return k.weighted_sum() % k.r() == 0;
}

// Constituents of Ind_{S_n}^{G} 1 for G = Z_r wr S_n (quotient = false) or
// G = (Z_r^n / diag) x| S_n (quotient = true), colexicographic.
inline std::vector<WeightVector> induced_decomposition(std::size_t n, std::size_t r,
                                                       bool quotient,
                                                       Budget const& budget = {}) {
  detail::require(n >= 1 && r >= 1, "induced_decomposition: n, r must be >= 1");
  detail::guard_compositions(n, r, budget);
  std::vector<WeightVector> out;
  detail::for_each_composition(n, r, [&](std::vector<std::uint32_t> const& k, std::uint64_t res) {
    if (!quotient || res == 0) out.emplace_back(k);
  });
  return out;
}

// <Res_{S_n} chi_k, 1> = (1/n!) sum_{sigma} chi_k(0; sigma), which by
// Frobenius reciprocity is the multiplicity of CM(k) in Ind_{S_n}^G 1.
inline std::uint64_t multiplicity_in_induced(WeightVector const& k, bool quotient) {
  std::size_t const n = k.n();
  detail::require(n >= 1, "multiplicity_in_induced: n must be >= 1");
  if (n > 6) throw budget_exceeded("multiplicity_in_induced: n above guard", n, 6);
  if (quotient && !descends_to_quotient(k))
    throw invalid_input("CM(" + k.to_string() + ") is not a representation of the quotient group");
  MonomialModule const m(k);
  std::vector<Elem> const zero(n, 0);
  Cyclotomic total(static_cast<std::uint32_t>(k.r()));
  for (auto const& sigma : all_perms(n)) total += character_value(m, zero, sigma);
  auto const v = total.as_integer();
  std::int64_t const nf = factorial(n).convert_to<std::int64_t>();
  if (!v || *v < 0 || *v % nf != 0)
    throw invariant_violation("multiplicity of CM(" + k.to_string() + ") is not a non-negative integer");
  return static_cast<std::uint64_t>(*v / nf);
}

// ---------------------------------------------------------------------------
// Symmetric group characters

using Partition = std::vector<std::uint32_t>;

inline std::string to_string(Partition const& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

inline bool is_partition(Partition const& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 0 || (i > 0 && p[i] > p[i - 1])) return false;
  return true;
}

inline std::uint32_t size_of(Partition const& p) {
  std::uint32_t s = 0;
  for (auto v : p) s += v;
  return s;
}

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(std::uint32_t n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t max) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = std::min(left, max); v >= 1; --v) {
      cur.push_back(v);
      self(self, left - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Size of the centraliser of an element of cycle type rho.
inline BigInt centralizer_order(Partition const& rho) {
  BigInt z = 1;
  std::map<std::uint32_t, std::uint32_t> mult;
  for (auto v : rho) ++mult[v];
  for (auto [len, m] : mult) z *= power(len, m) * factorial(m);
  return z;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length l is
// moving one bead from position b to the empty position b - l; the sign is
// (-1)^(beads strictly between).
inline std::int64_t mn_recurse(std::vector<std::uint32_t> beta, std::span<std::uint32_t const> rho) {
  if (rho.empty()) return 1;
  std::uint32_t const l = rho[0];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] < l) continue;
    std::uint32_t const target = beta[i] - l;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    std::size_t between = 0;
    for (auto b : beta)
      if (b > target && b < beta[i]) ++between;
    auto next = beta;
    next[i] = target;
    std::int64_t const sub = mn_recurse(std::move(next), rho.subspan(1));
    total += between % 2 == 0 ? sub : -sub;
  }
  return total;
}

}  // namespace detail

// Irreducible character chi^mu at the class of cycle type rho.
inline std::int64_t sn_character(Partition const& mu, Partition const& rho) {
  detail::require(is_partition(mu) && is_partition(rho), "malformed partition");
  detail::require(size_of(mu) == size_of(rho), "partitions of different sizes");
  if (size_of(mu) > 10) throw budget_exceeded("sn_character: n above guard", size_of(mu), 10);
  std::vector<std::uint32_t> beta(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    beta[i] = mu[i] + static_cast<std::uint32_t>(mu.size() - 1 - i);
  return detail::mn_recurse(std::move(beta), rho);
}

// Permutation with the given cycle type, cycles on consecutive points.
inline Perm perm_of_type(Partition const& rho) {
  Perm p(size_of(rho));
  std::uint32_t start = 0;
  for (auto len : rho) {
    for (std::uint32_t j = 0; j < len; ++j) p[start + j] = start + (j + 1) % len;
    start += len;
  }
  return p;
}

struct OrbitMultiplicityRow {
  ParkingFunction representative;
  std::uint64_t orbit_size;
  std::vector<std::uint64_t> multiplicities;  // one per column partition
};

struct OrbitMultiplicityTable {
  std::uint32_t n;
  std::vector<Partition> columns;
  std::vector<OrbitMultiplicityRow> rows;

  std::uint64_t at(std::string_view rep, Partition const& mu) const {
    for (auto const& row : rows)
      if (to_string(row.representative.entries) == rep)
        for (std::size_t c = 0; c < columns.size(); ++c)
          if (columns[c] == mu) return row.multiplicities[c];
    throw invalid_input("no such table entry");
  }
};

// Decomposes the permutation character of S_n on each parking-function
// orbit into irreducibles.
inline OrbitMultiplicityTable orbit_multiplicity_table(std::uint32_t n) {
  detail::guard_length(n, 6, "orbit_multiplicity_table");
  OrbitMultiplicityTable table{n, partitions_of(n), {}};
  BigInt const nf = factorial(n);
  std::vector<Partition> const classes = partitions_of(n);
  for (auto const& orbit : orbit_decomposition(n)) {
    std::vector<std::uint32_t> arrangement(orbit.representative.entries.begin(),
                                           orbit.representative.entries.end());
    // Fixed points of each class on the orbit.
    std::vector<std::int64_t> fixed;
    for (auto const& rho : classes) {
      Perm const sigma = perm_of_type(rho);
      auto a = arrangement;
      std::int64_t count = 0;
      do {
        if (permute_positions<std::uint32_t>(sigma, a) == a) ++count;
      } while (std::next_permutation(a.begin(), a.end()));
      fixed.push_back(count);
    }
    OrbitMultiplicityRow row{orbit.representative, orbit.size, {}};
    for (auto const& mu : table.columns) {
      BigInt sum = 0;
      for (std::size_t c = 0; c < classes.size(); ++c)
        sum += (nf / centralizer_order(classes[c])) * fixed[c] * sn_character(mu, classes[c]);
      if (sum < 0 || sum % nf != 0)
        throw invariant_violation("non-integral multiplicity in orbit table");
      row.multiplicities.push_back((sum / nf).convert_to<std::uint64_t>());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace gelfandpark

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "parking.hpp"
#include "qcatalan.hpp"

namespace gelfandpark {

// (d_0, d_1, ..., d_{n-1}): d_i vertices with exactly i children, i.e. the
// exponent vector of t_0^{d_0} t_1^{d_1} ...
using DegreeType = std::vector<std::uint32_t>;

// Lexicographic monomial order with t_0 the leading variable, largest
// monomial first: t_0^3 t_3, t_0^2 t_1 t_2, t_0 t_1^3.
using MonomialOrder = std::greater<DegreeType>;

// Polynomial in t_0 < t_1 < ... over rooted plane trees on n vertices,
// terms iterated in MonomialOrder.
struct DegreeTypePolynomial {
  std::size_t n = 0;
  std::map<DegreeType, BigInt, MonomialOrder> terms;

  BigInt mass() const {
    BigInt s = 0;
    for (auto const& [t, c] : terms) s += c;
    return s;
  }

  // "t0^3 t3 + 3 t0^2 t1 t2 + t0 t1^3"
  std::string to_string() const {
    std::string s;
    for (auto const& [type, c] : terms) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += c.str() + " ";
      bool first = true;
      for (std::size_t i = 0; i < type.size(); ++i) {
        if (type[i] == 0) continue;
        s += (first ? "" : " ") + std::string("t") + std::to_string(i);
        if (type[i] > 1) s += "^" + std::to_string(type[i]);
        first = false;
      }
    }
    return s;
  }

  friend bool operator==(DegreeTypePolynomial const&, DegreeTypePolynomial const&) = default;
};

namespace detail {

using TypeCounts = std::map<DegreeType, BigInt, MonomialOrder>;

// Trees and ordered forests by vertex count, with degree types padded to
// length `width`. Memo tables are std::map, so returned references stay
// valid across later insertions.
class PlaneTreeCounter {
 public:
  explicit PlaneTreeCounter(std::size_t width) : width_(width) {}

  // Rooted plane trees on m vertices: a root with c children followed by an
  // ordered forest of c trees on m - 1 vertices.
  TypeCounts const& trees(std::size_t m) {
    if (auto it = trees_.find(m); it != trees_.end()) return it->second;
    TypeCounts out;
    for (std::size_t c = 0; c + 1 <= m; ++c) {
      for (auto const& [type, count] : forests(m - 1, c)) {
        DegreeType t = type;
        ++t[c];
        out[t] += count;
      }
    }
    return trees_[m] = std::move(out);
  }

  // Ordered sequences of c trees with s vertices in total.
  TypeCounts const& forests(std::size_t s, std::size_t c) {
    auto key = std::make_pair(s, c);
    if (auto it = forests_.find(key); it != forests_.end()) return it->second;
    TypeCounts out;
    if (c == 0) {
      if (s == 0) out[DegreeType(width_, 0)] = 1;
    } else {
      for (std::size_t first = 1; first + (c - 1) <= s; ++first) {
        TypeCounts const& head = trees(first);
        TypeCounts const& tail = forests(s - first, c - 1);
        for (auto const& [a, ca] : head)
          for (auto const& [b, cb] : tail) {
            DegreeType t(width_);
            for (std::size_t i = 0; i < width_; ++i) t[i] = a[i] + b[i];
            out[t] += ca * cb;
          }
      }
    }
    return forests_[key] = std::move(out);
  }

 private:
  std::size_t width_;
  std::map<std::size_t, TypeCounts> trees_;
  std::map<std::pair<std::size_t, std::size_t>, TypeCounts> forests_;
};

}  // namespace detail

// s_n: sum over rooted plane trees on n vertices of t^{degree type}, where
// "degree" is the number of children.
inline DegreeTypePolynomial s_polynomial(std::size_t n) {
  if (n < 2) throw invalid_input("s_polynomial: n must be >= 2");
  if (n > 12) throw budget_exceeded("s_polynomial: n above guard", n, 12);
  detail::PlaneTreeCounter counter(n);
  return {n, counter.trees(n)};
}

// Coefficients of (d_0, d_1, ...) from Lagrange inversion: the number of
// plane trees with that child-count profile is (1/n) * n! / prod d_i!,
// over profiles with sum d_i = n and sum i d_i = n - 1.
inline DegreeTypePolynomial s_polynomial_via_lagrange(std::size_t n) {
  if (n < 2) throw invalid_input("s_polynomial_via_lagrange: n must be >= 2");
  if (n > 12) throw budget_exceeded("s_polynomial_via_lagrange: n above guard", n, 12);
  DegreeTypePolynomial out{n, {}};
  DegreeType d(n, 0);
  // Choose d_1..d_{n-1} as a partition of n - 1 (part i used d_i times).
  auto rec = [&](auto&& self, std::size_t part, std::size_t left) -> void {
    if (part == 0) {
      if (left != 0) return;
      std::size_t nonleaf = 0;
      for (std::size_t i = 1; i < n; ++i) nonleaf += d[i];
      if (nonleaf > n) return;
      d[0] = static_cast<std::uint32_t>(n - nonleaf);
      BigInt const m = multinomial_of(std::span<std::uint32_t const>(d));
      if (m % n != 0) throw invariant_violation("Lagrange coefficient is not integral");
      out.terms[d] = m / n;
      d[0] = 0;
      return;
    }
    for (std::size_t c = 0; c * part <= left; ++c) {
      d[part] = static_cast<std::uint32_t>(c);
      self(self, part - 1, left - c * part);
    }
    d[part] = 0;
  };
  rec(rec, n - 1, n - 1);
  return out;
}

inline std::vector<BigInt> coefficient_vector(DegreeTypePolynomial const& p) {
  std::vector<BigInt> v;
  for (auto const& [t, c] : p.terms) v.push_back(c);
  return v;
}

struct AlphaComparison {
  std::size_t n;
  bool equal;                                // positional equality
  bool multiset_equal;                       // same coefficients ignoring order
  std::optional<std::size_t> first_divergence;  // 0-based position
  std::vector<BigInt> alpha;                 // coefficients of C_n(q), ascending exponent
  std::vector<BigInt> v;                     // coefficient vector of s_{n+1}
};

inline AlphaComparison compare_with_alpha(std::size_t n) {
  detail::guard_length(n, 8, "compare_with_alpha");
  AlphaComparison out{n, false, false, std::nullopt,
                      poly_stats(cq_polynomial(n)).coefficients,
                      coefficient_vector(s_polynomial(n + 1))};
  std::size_t const common = std::min(out.alpha.size(), out.v.size());
  for (std::size_t i = 0; i < common && !out.first_divergence; ++i)
    if (out.alpha[i] != out.v[i]) out.first_divergence = i;
  if (!out.first_divergence && out.alpha.size() != out.v.size()) out.first_divergence = common;
  out.equal = !out.first_divergence;
  auto a = out.alpha, b = out.v;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  out.multiset_equal = a == b;
  return out;
}

}  // namespace gelfandpark

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "budget.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "groups.hpp"
#include "parallel.hpp"
#include "qcatalan.hpp"
#include "repthy.hpp"

namespace gelfandpark {

inline constexpr long double kRealTolerance = 1e-9L;

// m_lambda(xi^{h_1}, ..., xi^{h_n}) with lambda = lambda_k and xi a primitive
// r-th root of unity: the sum of x^a over the distinct arrangements a of
// lambda. Arrangements are built position by position; a state is the
// multiset of exponents still unplaced (mixed radix over k), and every
// transition lowers the state index, so one descending sweep suffices.
inline Cyclotomic monomial_symmetric_value(WeightVector const& k, std::span<Elem const> h) {
  std::size_t const n = k.n();
  auto const r = static_cast<std::uint32_t>(k.r());
  detail::require(h.size() == n, "monomial_symmetric_value: |h| must equal sum k_i");
  for (auto v : h) detail::require(v < r, "monomial_symmetric_value: residue out of range");
  std::vector<std::uint64_t> radix(r + 1, 1);
  for (std::uint32_t j = 0; j < r; ++j) radix[j + 1] = radix[j] * (k[j] + 1);
  std::uint64_t const states = radix[r];
  std::vector<std::int64_t> acc(states * r, 0);
  acc[(states - 1) * r] = 1;
  for (std::uint64_t s = states; s-- > 1;) {
    std::int64_t const* src = &acc[s * r];
    if (std::all_of(src, src + r, [](std::int64_t c) { return c == 0; })) continue;
    std::uint64_t placed = 0;
    for (std::uint32_t j = 0; j < r; ++j) placed += k[j] - (s / radix[j]) % (k[j] + 1);
    Elem const hi = h[placed];
    for (std::uint32_t j = 0; j < r; ++j) {
      if ((s / radix[j]) % (k[j] + 1) == 0) continue;
      std::int64_t* dst = &acc[(s - radix[j]) * r];
      std::uint32_t const shift = static_cast<std::uint32_t>((std::uint64_t{hi} * j) % r);
      for (std::uint32_t c = 0; c < r; ++c) dst[(c + shift) % r] += src[c];
    }
  }
  Cyclotomic out(r);
  for (std::uint32_t c = 0; c < r; ++c) out.add_power(c, acc[c]);
  return out;
}

// Exact value num / den with num in Z[xi].
struct ZonalValue {
  Cyclotomic numerator;
  std::int64_t denominator = 1;

  Complex to_complex() const {
    return numerator.to_complex() / static_cast<long double>(denominator);
  }

  friend bool operator==(ZonalValue const& a, ZonalValue const& b) {
    Cyclotomic x = a.numerator, y = b.numerator;
    x *= b.denominator;
    y *= a.denominator;
    return x == y;
  }
};

inline void require_descends(WeightVector const& k) {
  if (!descends_to_quotient(k))
    throw invalid_input("k = (" + k.to_string() + ") does not descend to the quotient group");
}

// omega^k at the coset of x: m_lambda(x) / m_lambda(1, ..., 1). Any
// representative of the coset may be passed.
inline ZonalValue zonal_value(WeightVector const& k, std::span<Elem const> x) {
  require_descends(k);
  return {monomial_symmetric_value(k, x), multinomial(k).convert_to<std::int64_t>()};
}

// omega^k(x) = (1/|K|) sum_{s in S_n} chi_k(x^{-1} (0; s)) for x in
// (Z_r^n / diag) x| S_n, the gamma part of x being any lift.
inline ZonalValue zonal_via_definition(WeightVector const& k, WreathElement const& x) {
  require_descends(k);
  std::size_t const n = k.n();
  if (n > 4) throw budget_exceeded("zonal_via_definition: n above guard", n, 4);
  detail::require(x.gamma_part.size() == n, "group element has the wrong degree");
  auto const r = static_cast<std::uint32_t>(k.r());
  WreathProduct const w(make_group(GroupSpec::cyclic(r)), n);
  MonomialModule const m(k);
  WreathElement const xinv = w.inverse(x);
  Cyclotomic total(r);
  for (auto const& s : all_perms(n)) {
    WreathElement const y = w.multiply(xinv, {std::vector<Elem>(n, 0), s});
    total += character_value(m, y.gamma_part, y.perm_part);
  }
  return {total, factorial(n).convert_to<std::int64_t>()};
}

namespace detail {
// Sorted residue multisets of size n over Z_r, i.e. representatives of the
// S_n-orbits on Z_r^n.
template <typename Visit>
void for_each_multiset(std::size_t n, std::uint32_t r, Visit&& visit) {
  std::vector<Elem> cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      visit(std::span<Elem const>(cur));
      return;
    }
    Elem const lo = cur.empty() ? 0 : cur.back();
    for (Elem v = lo; v < r; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}
}  // namespace detail

struct CensusEntry {
  WeightVector k;
  bool real;
};

struct CensusResult {
  std::size_t n;
  std::size_t real_count;
  std::size_t total;
  std::vector<CensusEntry> entries;
};

// Counts k in D(n) whose zonal spherical function is real-valued. Each k is
// decided twice: |Im omega| < 1e-9 in floating point, and exactly by
// m_lambda(h) == m_lambda(-h) in Z[xi]. Disagreement is an invariant
// violation.
//
// omega^k is constant on S_n-orbits and on diagonal shifts, so visiting one
// sorted multiset per S_n-orbit of Z_r^n covers every coset point; set
// every_point to walk all r^{n-1} canonical points instead.
inline CensusResult realness_census(std::size_t n, bool every_point = false,
                                    unsigned workers = 1) {
  detail::guard_length(n, 7, "realness_census");
  auto const r = static_cast<std::uint32_t>(n + 1);
  auto const ks = enumerate_weight_vectors(n, r);
  std::vector<std::vector<Elem>> points;
  if (every_point) {
    CosetSpace const space(make_group(GroupSpec::cyclic(r)), n);
    for (std::uint64_t i = 0; i < space.size(); ++i) points.push_back(space.point(i));
  } else {
    detail::for_each_multiset(n, r, [&](std::span<Elem const> h) {
      points.emplace_back(h.begin(), h.end());
    });
  }
  std::vector<char> flags(ks.size(), 0);
  parallel_chunks(ks.size(), workers, [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      auto const& k = ks[idx];
      auto const dim = static_cast<long double>(multinomial(k).convert_to<std::int64_t>());
      bool float_real = true, exact_real = true;
      for (auto const& h : points) {
        Cyclotomic const v = monomial_symmetric_value(k, h);
        if (std::fabs(v.to_complex().imag() / dim) >= kRealTolerance) float_real = false;
        if (!(v == v.conjugate())) exact_real = false;
      }
      if (float_real != exact_real)
        throw invariant_violation("realness of k = (" + k.to_string() +
                                  ") differs between float and exact tests");
      flags[idx] = exact_real;
    }
  });
  CensusResult out{n, 0, ks.size(), {}};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    out.entries.push_back({ks[i], flags[i] != 0});
    out.real_count += flags[i];
  }
  return out;
}

struct CloudPoint {
  std::uint64_t index;
  double re;
  double im;
};

using ValueCloud = std::vector<CloudPoint>;

// omega^k at every point of Z_r^n / diag, r = |k|, n = sum k_i, in coset
// index order. With all_tuples the cloud instead covers every tuple of
// Z_r^n (r^n rows, index = base-r digits h_1 ... h_n, h_1 most significant);
// the set of values is the same.
inline ValueCloud value_cloud(WeightVector const& k, Budget const& budget = {},
                              unsigned workers = 1, bool all_tuples = false) {
  require_descends(k);
  std::size_t const n = k.n();
  auto const r = static_cast<std::uint32_t>(k.r());
  detail::require(n >= 2, "value_cloud: n must be >= 2");
  CosetSpace const space = coset_space(make_group(GroupSpec::cyclic(r)), n, budget.points);
  std::uint64_t rows = space.size();
  if (all_tuples) {
    rows = detail::capped_power(r, n, budget.points);
    budget.check_points(rows, "value_cloud");
  }
  auto const dim = static_cast<long double>(multinomial(k).convert_to<std::int64_t>());
  // Values depend only on the sorted multiset of coordinates.
  std::map<std::vector<Elem>, Complex> by_orbit;
  detail::for_each_multiset(n, r, [&](std::span<Elem const> h) {
    by_orbit.emplace(std::vector<Elem>(h.begin(), h.end()), Complex{});
  });
  std::vector<std::map<std::vector<Elem>, Complex>::iterator> slots;
  for (auto it = by_orbit.begin(); it != by_orbit.end(); ++it) slots.push_back(it);
  parallel_chunks(slots.size(), workers, [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      slots[i]->second = monomial_symmetric_value(k, slots[i]->first).to_complex() / dim;
  });
  ValueCloud cloud;
  cloud.reserve(rows);
  std::vector<Elem> p(n);
  for (std::uint64_t i = 0; i < rows; ++i) {
    if (all_tuples) {
      std::uint64_t rest = i;
      for (std::size_t c = n; c-- > 0; rest /= r) p[c] = static_cast<Elem>(rest % r);
    } else {
      space.point_into(i, p);
    }
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    Complex const z = by_orbit.at(sorted);
    cloud.push_back({i, static_cast<double>(z.real()), static_cast<double>(z.imag())});
  }
  return cloud;
}

// (1/|X|) sum_x omega^a(x) conj(omega^b(x)) over X = Z_r^n / diag. Since both
// functions are constant on S_n cosets this equals the average over the
// whole group.
inline Complex zonal_inner_product(WeightVector const& a, WeightVector const& b) {
  detail::require(a.r() == b.r() && a.n() == b.n(), "zonal functions of different pairs");
  CosetSpace const space(make_group(GroupSpec::cyclic(static_cast<std::uint32_t>(a.r()))), a.n());
  Complex sum = 0;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    auto const x = space.point(i);
    sum += zonal_value(a, x).to_complex() * std::conj(zonal_value(b, x).to_complex());
  }
  return sum / static_cast<long double>(space.size());
}

}  // namespace gelfandpark

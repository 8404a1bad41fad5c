#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace gelfandpark {

using Complex = std::complex<long double>;

// Phi_r as a coefficient vector (ascending degree), cached per r. Built
// bottom-up over the divisors of r: Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
inline std::vector<std::int64_t> const& cyclotomic_polynomial(std::uint32_t r) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  detail::require(r >= 1, "cyclotomic order must be >= 1");
  std::lock_guard<std::mutex> lock(mu);
  for (std::uint32_t d = 1; d <= r; ++d) {
    if (r % d != 0 || cache.contains(d)) continue;
    std::vector<std::int64_t> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (std::uint32_t e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      auto const& den = cache.at(e);  // monic
      std::size_t const dn = den.size() - 1;
      std::vector<std::int64_t> quot(num.size() - dn, 0);
      for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t const c = num[i];
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
      }
      num = std::move(quot);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(r);
}

// Element of Z[xi], xi = exp(2 pi i / r), stored as coefficients of
// 1, xi, ..., xi^{r-1}. The representation is not unique; equality reduces
// both sides modulo Phi_r first.
class Cyclotomic {
 public:
  explicit Cyclotomic(std::uint32_t r = 1) : coeffs_(r, 0) {
    detail::require(r >= 1, "cyclotomic order must be >= 1");
  }

  static Cyclotomic integer(std::uint32_t r, std::int64_t v) {
    Cyclotomic c(r);
    c.coeffs_[0] = v;
    return c;
  }

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(coeffs_.size()); }
  std::vector<std::int64_t> const& coefficients() const noexcept { return coeffs_; }

  // += c * xi^e, e taken mod r (negative allowed).
  void add_power(std::int64_t e, std::int64_t c = 1) {
    auto const r = static_cast<std::int64_t>(coeffs_.size());
    coeffs_[static_cast<std::size_t>(((e % r) + r) % r)] += c;
  }

  Cyclotomic& operator+=(Cyclotomic const& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Cyclotomic& operator*=(std::int64_t s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Cyclotomic operator*(Cyclotomic const& a, Cyclotomic const& b) {
    a.check_same(b);
    std::size_t const r = a.coeffs_.size();
    Cyclotomic out(static_cast<std::uint32_t>(r));
    for (std::size_t i = 0; i < r; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) out.coeffs_[(i + j) % r] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  // Multiplication by xi^e.
  Cyclotomic rotated(std::int64_t e) const {
    Cyclotomic out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out.add_power(static_cast<std::int64_t>(i) + e, coeffs_[i]);
    return out;
  }

  // Complex conjugate: xi^j -> xi^{-j}.
  Cyclotomic conjugate() const {
    Cyclotomic out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out.add_power(-static_cast<std::int64_t>(i), coeffs_[i]);
    return out;
  }

  // Unique representative of degree < phi(r).
  std::vector<std::int64_t> reduced() const {
    auto const& phi = cyclotomic_polynomial(order());
    std::vector<std::int64_t> a = coeffs_;
    std::size_t const dn = phi.size() - 1;
    for (std::size_t i = a.size(); i-- > dn;) {
      std::int64_t const c = a[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dn; ++j) a[i - dn + j] -= c * phi[j];
    }
    a.resize(dn);
    return a;
  }

  bool is_zero() const {
    auto const red = reduced();
    for (auto c : red)
      if (c != 0) return false;
    return true;
  }

  // The rational integer this element equals, if it is one.
  std::optional<std::int64_t> as_integer() const {
    auto const red = reduced();
    for (std::size_t i = 1; i < red.size(); ++i)
      if (red[i] != 0) return std::nullopt;
    return red.empty() ? 0 : red[0];
  }

  Complex to_complex() const {
    Complex z = 0;
    long double const two_pi = 2 * std::numbers::pi_v<long double>;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      long double const t = two_pi * static_cast<long double>(j) / coeffs_.size();
      z += static_cast<long double>(coeffs_[j]) * Complex(std::cos(t), std::sin(t));
    }
    return z;
  }

  friend bool operator==(Cyclotomic const& a, Cyclotomic const& b) {
    a.check_same(b);
    return a.reduced() == b.reduced();
  }

 private:
  void check_same(Cyclotomic const& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw invalid_input("cyclotomic orders differ");
  }

  std::vector<std::int64_t> coeffs_;
};

}  // namespace gelfandpark

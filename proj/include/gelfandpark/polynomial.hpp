#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace gelfandpark {

// Univariate polynomial in q with arbitrary-precision exponents and
// coefficients. Zero coefficients are never stored; iteration is by
// ascending exponent.
class SparsePolynomial {
 public:
  using Terms = std::map<BigInt, BigInt>;

  SparsePolynomial() = default;
  SparsePolynomial(std::initializer_list<std::pair<long long, long long>> terms) {
    for (auto const& [e, c] : terms) add_term(e, c);
  }

  void add_term(BigInt const& exponent, BigInt const& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(BigInt const& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // "q + 3q^3 + q^6"
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto const& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      first = false;
      bool const unit = mag == 1 && e != 0;
      if (!unit) s += mag.str();
      if (e != 0) s += e == 1 ? "q" : "q^" + e.str();
    }
    return s;
  }

  friend bool operator==(SparsePolynomial const&, SparsePolynomial const&) = default;

 private:
  Terms terms_;
};

struct PolyStats {
  BigInt value_at_one;
  BigInt derivative_at_one;
  std::vector<BigInt> coefficients;  // by ascending exponent
};

inline PolyStats poly_stats(SparsePolynomial const& p) {
  PolyStats st{0, 0, {}};
  for (auto const& [e, c] : p.terms()) {
    st.value_at_one += c;
    st.derivative_at_one += e * c;
    st.coefficients.push_back(c);
  }
  return st;
}

// Smallest exponent whose coefficients differ, if any.
inline std::optional<BigInt> first_difference(SparsePolynomial const& a,
                                              SparsePolynomial const& b) {
  std::optional<BigInt> best;
  auto scan = [&](SparsePolynomial const& x, SparsePolynomial const& y) {
    for (auto const& [e, c] : x.terms()) {
      if (best && e >= *best) break;
      if (y.coefficient(e) != c) {
        best = e;
        break;
      }
    }
  };
  scan(a, b);
  scan(b, a);
  return best;
}

}  // namespace gelfandpark

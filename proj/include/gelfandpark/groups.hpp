#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "budget.hpp"
#include "errors.hpp"
#include "permutation.hpp"

namespace gelfandpark {

// Dense element index. Every group built here places its identity at 0.
using Elem = std::uint32_t;

namespace detail {

struct GroupImpl {
  virtual ~GroupImpl() = default;
  virtual std::uint64_t order() const = 0;
  virtual Elem multiply(Elem a, Elem b) const = 0;
  virtual Elem invert(Elem a) const = 0;
  virtual std::string label(Elem a) const = 0;
};

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Saturating |base|^exp, capped at `cap + 1` so budget checks stay exact.
inline std::uint64_t capped_power(std::uint64_t base, std::uint64_t exp,
                                  std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (cap + 1) / base) return cap + 1;
    r *= base;
  }
  return std::min(r, cap + 1);
}

}  // namespace detail

// An indexed finite group with elements 0..order()-1 and identity 0.
// Immutable after construction and cheap to copy (shared implementation).
// Groups of order <= kTableLimit get a precomputed Cayley table.
class FiniteGroup {
 public:
  static constexpr std::uint64_t kTableLimit = 2048;

  FiniteGroup(std::shared_ptr<detail::GroupImpl const> impl, std::string name)
      : impl_(std::move(impl)), name_(std::move(name)), order_(impl_->order()) {
    if (order_ <= kTableLimit) {
      auto const n = static_cast<Elem>(order_);
      table_.resize(static_cast<std::size_t>(order_ * order_));
      inverses_.resize(n);
      for (Elem a = 0; a < n; ++a) {
        inverses_[a] = impl_->invert(a);
        for (Elem b = 0; b < n; ++b) table_[a * order_ + b] = impl_->multiply(a, b);
      }
    }
  }

  std::uint64_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }
  std::string const& name() const noexcept { return name_; }

  Elem product(Elem a, Elem b) const {
    if (!table_.empty()) return table_[a * order_ + b];
    return impl_->multiply(a, b);
  }
  Elem inverse(Elem a) const {
    if (!inverses_.empty()) return inverses_[a];
    return impl_->invert(a);
  }
  std::string label(Elem a) const { return impl_->label(a); }

  bool is_abelian() const {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = a + 1; b < order_; ++b)
        if (product(a, b) != product(b, a)) return false;
    return true;
  }

 private:
  std::shared_ptr<detail::GroupImpl const> impl_;
  std::string name_;
  std::uint64_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
};

// ---------------------------------------------------------------------------
// Named groups

struct GroupSpec {
  enum class Kind { cyclic, symmetric, alternating, general_linear, special_linear };

  Kind kind = Kind::cyclic;
  std::uint32_t first = 1;   // r, n or d
  std::uint32_t second = 0;  // p for the matrix groups

  static GroupSpec cyclic(std::uint32_t r) { return {Kind::cyclic, r, 0}; }
  static GroupSpec symmetric(std::uint32_t n) { return {Kind::symmetric, n, 0}; }
  static GroupSpec alternating(std::uint32_t n) { return {Kind::alternating, n, 0}; }
  static GroupSpec general_linear(std::uint32_t d, std::uint32_t p) {
    return {Kind::general_linear, d, p};
  }
  static GroupSpec special_linear(std::uint32_t d, std::uint32_t p) {
    return {Kind::special_linear, d, p};
  }

  // Accepts "Z4", "C4", "S3", "A4", "GL(2,3)", "SL(3,2)"; case-insensitive,
  // whitespace ignored.
  static GroupSpec parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    auto number = [&](std::string_view digits) -> std::uint32_t {
      if (digits.empty() || digits.size() > 9 ||
          !std::all_of(digits.begin(), digits.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw invalid_input("malformed group spec: " + std::string(text));
      return static_cast<std::uint32_t>(std::stoul(std::string(digits)));
    };
    auto matrix = [&](std::size_t prefix, Kind kind) {
      std::string_view rest(s);
      rest.remove_prefix(prefix);
      if (rest.size() < 5 || rest.front() != '(' || rest.back() != ')')
        throw invalid_input("malformed group spec: " + std::string(text));
      rest = rest.substr(1, rest.size() - 2);
      auto comma = rest.find(',');
      if (comma == std::string_view::npos)
        throw invalid_input("malformed group spec: " + std::string(text));
      GroupSpec g{kind, number(rest.substr(0, comma)), number(rest.substr(comma + 1))};
      g.validate();
      return g;
    };
    if (s.rfind("GL", 0) == 0) return matrix(2, Kind::general_linear);
    if (s.rfind("SL", 0) == 0) return matrix(2, Kind::special_linear);
    if (s.size() >= 2) {
      GroupSpec g;
      switch (s[0]) {
        case 'Z':
        case 'C': g = cyclic(number(std::string_view(s).substr(1))); break;
        case 'S': g = symmetric(number(std::string_view(s).substr(1))); break;
        case 'A': g = alternating(number(std::string_view(s).substr(1))); break;
        default: throw invalid_input("unknown group spec: " + std::string(text));
      }
      g.validate();
      return g;
    }
    throw invalid_input("unknown group spec: " + std::string(text));
  }

  void validate() const {
    switch (kind) {
      case Kind::cyclic:
        detail::require(first >= 1, "cyclic group needs r >= 1");
        break;
      case Kind::symmetric:
      case Kind::alternating:
        detail::require(first >= 1, "permutation group needs n >= 1");
        detail::require(first <= 12, "permutation degree above 12");
        break;
      case Kind::general_linear:
      case Kind::special_linear:
        detail::require(first >= 1 && first <= 3, "matrix dimension must be 1..3");
        detail::require(detail::is_prime(second), "field order must be prime");
        detail::require(second <= 7, "field order above 7");
        break;
    }
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::cyclic: return "Z" + std::to_string(first);
      case Kind::symmetric: return "S" + std::to_string(first);
      case Kind::alternating: return "A" + std::to_string(first);
      case Kind::general_linear:
        return "GL(" + std::to_string(first) + "," + std::to_string(second) + ")";
      case Kind::special_linear:
        return "SL(" + std::to_string(first) + "," + std::to_string(second) + ")";
    }
    return {};
  }

  // Order by the standard formulas, without enumeration.
  BigInt expected_order() const {
    switch (kind) {
      case Kind::cyclic: return first;
      case Kind::symmetric: return factorial(first);
      case Kind::alternating: return first == 1 ? BigInt(1) : factorial(first) / 2;
      case Kind::general_linear:
      case Kind::special_linear: {
        BigInt pd = power(second, first), o = 1;
        for (std::uint32_t i = 0; i < first; ++i) o *= pd - power(second, i);
        return kind == Kind::special_linear ? o / (second - 1) : o;
      }
    }
    return 0;
  }

  friend bool operator==(GroupSpec const&, GroupSpec const&) = default;
};

namespace detail {

class CyclicImpl final : public GroupImpl {
 public:
  explicit CyclicImpl(std::uint32_t r) : r_(r) {}
  std::uint64_t order() const override { return r_; }
  Elem multiply(Elem a, Elem b) const override { return (a + b) % r_; }
  Elem invert(Elem a) const override { return (r_ - a) % r_; }
  std::string label(Elem a) const override { return std::to_string(a); }

 private:
  std::uint32_t r_;
};

// Subgroup of S_n given by a list of permutation ranks; identity first.
class PermGroupImpl final : public GroupImpl {
 public:
  PermGroupImpl(std::size_t n, bool even_only) : n_(n) {
    auto perms = all_perms(n);
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (!even_only || is_even(perms[i])) ranks_.push_back(i);
  }
  std::uint64_t order() const override { return ranks_.size(); }
  Elem multiply(Elem a, Elem b) const override {
    return lookup(rank_perm(compose(perm(a), perm(b))));
  }
  Elem invert(Elem a) const override { return lookup(rank_perm(inverse(perm(a)))); }
  std::string label(Elem a) const override {
    std::string s = "[";
    auto p = perm(a);
    for (std::size_t i = 0; i < p.size(); ++i)
      s += (i ? " " : "") + std::to_string(p[i] + 1);
    return s + "]";
  }

 private:
  Perm perm(Elem a) const { return unrank_perm(n_, ranks_[a]); }
  Elem lookup(std::uint64_t rank) const {
    auto it = std::lower_bound(ranks_.begin(), ranks_.end(), rank);
    return static_cast<Elem>(it - ranks_.begin());
  }
  std::size_t n_;
  std::vector<std::uint64_t> ranks_;
};

// Invertible (or determinant-one) d x d matrices over F_p, each encoded as
// its row-major entry vector read in base p. Identity first, the rest by
// ascending code.
class MatrixGroupImpl final : public GroupImpl {
 public:
  MatrixGroupImpl(std::uint32_t d, std::uint32_t p, bool special) : d_(d), p_(p) {
    std::uint64_t const total = capped_power(p, std::uint64_t{d} * d, ~0ull >> 1);
    identity_code_ = encode(identity_entries());
    codes_.push_back(identity_code_);
    Entries m{};
    for (std::uint64_t code = 0; code < total; ++code) {
      decode_into(code, m);
      auto const det = determinant(m);
      bool keep = special ? det == 1 : det != 0;
      if (keep && code != identity_code_) codes_.push_back(code);
    }
  }
  std::uint64_t order() const override { return codes_.size(); }
  Elem multiply(Elem a, Elem b) const override {
    Entries x{}, y{}, z{};
    decode_into(codes_[a], x);
    decode_into(codes_[b], y);
    for (std::uint32_t i = 0; i < d_; ++i)
      for (std::uint32_t j = 0; j < d_; ++j) {
        std::uint32_t s = 0;
        for (std::uint32_t k = 0; k < d_; ++k) s += x[i * d_ + k] * y[k * d_ + j];
        z[i * d_ + j] = s % p_;
      }
    return lookup(encode(z));
  }
  Elem invert(Elem a) const override {
    // The group is finite: a^{-1} = a^{ord(a)-1}.
    Elem power = a, prev = 0;
    while (power != 0) {
      prev = power;
      power = multiply(power, a);
    }
    return a == 0 ? 0 : prev;
  }
  std::string label(Elem a) const override {
    Entries m{};
    decode_into(codes_[a], m);
    std::string s = "[";
    for (std::uint32_t i = 0; i < d_; ++i) {
      s += i ? ",[" : "[";
      for (std::uint32_t j = 0; j < d_; ++j)
        s += (j ? "," : "") + std::to_string(m[i * d_ + j]);
      s += "]";
    }
    return s + "]";
  }

 private:
  using Entries = std::array<std::uint32_t, 9>;

  Entries identity_entries() const {
    Entries m{};
    for (std::uint32_t i = 0; i < d_; ++i) m[i * d_ + i] = 1;
    return m;
  }
  std::uint64_t encode(Entries const& m) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i < d_ * d_; ++i) code = code * p_ + m[i];
    return code;
  }
  void decode_into(std::uint64_t code, Entries& m) const {
    for (std::uint32_t i = d_ * d_; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(code % p_);
      code /= p_;
    }
  }
  std::uint32_t determinant(Entries const& m) const {
    auto at = [&](std::uint32_t i, std::uint32_t j) { return static_cast<std::int64_t>(m[i * d_ + j]); };
    std::int64_t det = 0;
    if (d_ == 1) {
      det = at(0, 0);
    } else if (d_ == 2) {
      det = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    } else {
      det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
            at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
            at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }
    auto const p = static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(((det % p) + p) % p);
  }
  Elem lookup(std::uint64_t code) const {
    if (code == identity_code_) return 0;
    auto it = std::lower_bound(codes_.begin() + 1, codes_.end(), code);
    return static_cast<Elem>(it - codes_.begin());
  }

  std::uint32_t d_, p_;
  std::uint64_t identity_code_ = 0;
  std::vector<std::uint64_t> codes_;
};

}  // namespace detail

inline FiniteGroup make_group(GroupSpec const& spec, Budget const& budget = {}) {
  spec.validate();
  BigInt const order = spec.expected_order();
  if (order > budget.elements)
    throw budget_exceeded(spec.to_string() + ": element budget exceeded",
                          order > BigInt(~0ull) ? ~0ull : order.convert_to<std::uint64_t>(),
                          budget.elements);
  std::shared_ptr<detail::GroupImpl const> impl;
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      impl = std::make_shared<detail::CyclicImpl>(spec.first);
      break;
    case GroupSpec::Kind::symmetric:
    case GroupSpec::Kind::alternating:
      impl = std::make_shared<detail::PermGroupImpl>(
          spec.first, spec.kind == GroupSpec::Kind::alternating);
      break;
    case GroupSpec::Kind::general_linear:
    case GroupSpec::Kind::special_linear:
      impl = std::make_shared<detail::MatrixGroupImpl>(
          spec.first, spec.second, spec.kind == GroupSpec::Kind::special_linear);
      break;
  }
  return FiniteGroup(std::move(impl), spec.to_string());
}

inline FiniteGroup make_group(std::string_view spec, Budget const& budget = {}) {
  return make_group(GroupSpec::parse(spec), budget);
}

// Greedy generating set: scan elements in index order and keep any element
// not already in the subgroup generated so far.
inline std::vector<Elem> generating_set(FiniteGroup const& g) {
  std::vector<Elem> gens;
  std::vector<bool> in_sub(g.order(), false);
  in_sub[g.identity()] = true;
  for (Elem a = 0; a < g.order(); ++a) {
    if (in_sub[a]) continue;
    gens.push_back(a);
    std::fill(in_sub.begin(), in_sub.end(), false);
    in_sub[g.identity()] = true;
    std::vector<Elem> members{g.identity()};
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Elem s : gens) {
        Elem const x = g.product(members[i], s);
        if (!in_sub[x]) {
          in_sub[x] = true;
          members.push_back(x);
        }
      }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Wreath product Gamma wr S_n

struct WreathElement {
  std::vector<Elem> gamma_part;  // (g_1, ..., g_n)
  Perm perm_part;                // sigma, one-line, 0-based

  friend bool operator==(WreathElement const&, WreathElement const&) = default;
};

// Gamma^n x| S_n with the product
//   (g; s)(h; t) = (g_1 h_{s^{-1}(1)}, ..., g_n h_{s^{-1}(n)}; s t).
// Element index = rank(sigma) * |Gamma|^n + mixed-radix(g_1..g_n).
class WreathProduct {
 public:
  WreathProduct(FiniteGroup gamma, std::size_t n)
      : gamma_(std::move(gamma)), n_(n) {
    detail::require(n >= 1, "wreath product needs n >= 1");
    base_power_ = 1;
    for (std::size_t i = 0; i < n; ++i) base_power_ *= gamma_.order();
  }

  FiniteGroup const& gamma() const noexcept { return gamma_; }
  std::size_t degree() const noexcept { return n_; }
  std::uint64_t order() const {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n_; ++i) f *= i;
    return base_power_ * f;
  }

  WreathElement multiply(WreathElement const& x, WreathElement const& y) const {
    WreathElement z;
    z.gamma_part.resize(n_);
    Perm const sinv = gelfandpark::inverse(x.perm_part);
    for (std::size_t i = 0; i < n_; ++i)
      z.gamma_part[i] = gamma_.product(x.gamma_part[i], y.gamma_part[sinv[i]]);
    z.perm_part = compose(x.perm_part, y.perm_part);
    return z;
  }

  WreathElement inverse(WreathElement const& x) const {
    WreathElement z;
    z.gamma_part.resize(n_);
    for (std::size_t j = 0; j < n_; ++j)
      z.gamma_part[j] = gamma_.inverse(x.gamma_part[x.perm_part[j]]);
    z.perm_part = gelfandpark::inverse(x.perm_part);
    return z;
  }

  WreathElement identity() const {
    return {std::vector<Elem>(n_, gamma_.identity()), identity_perm(n_)};
  }

  Elem encode(WreathElement const& x) const {
    std::uint64_t code = 0;
    for (Elem g : x.gamma_part) code = code * gamma_.order() + g;
    return static_cast<Elem>(rank_perm(x.perm_part) * base_power_ + code);
  }

  WreathElement decode(Elem index) const {
    WreathElement x;
    std::uint64_t code = index % base_power_;
    x.perm_part = unrank_perm(n_, index / base_power_);
    x.gamma_part.resize(n_);
    for (std::size_t i = n_; i-- > 0;) {
      x.gamma_part[i] = static_cast<Elem>(code % gamma_.order());
      code /= gamma_.order();
    }
    return x;
  }

  std::string label(WreathElement const& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_; ++i)
      s += (i ? "," : "") + gamma_.label(x.gamma_part[i]);
    s += ";";
    for (std::size_t i = 0; i < n_; ++i) s += (i ? " " : "") + std::to_string(x.perm_part[i] + 1);
    return s + ")";
  }

  // View as an indexed FiniteGroup.
  FiniteGroup as_group() const;

 private:
  FiniteGroup gamma_;
  std::size_t n_;
  std::uint64_t base_power_;
};

namespace detail {
class WreathImpl final : public GroupImpl {
 public:
  explicit WreathImpl(WreathProduct w) : w_(std::move(w)) {}
  std::uint64_t order() const override { return w_.order(); }
  Elem multiply(Elem a, Elem b) const override {
    return w_.encode(w_.multiply(w_.decode(a), w_.decode(b)));
  }
  Elem invert(Elem a) const override { return w_.encode(w_.inverse(w_.decode(a))); }
  std::string label(Elem a) const override { return w_.label(w_.decode(a)); }

 private:
  WreathProduct w_;
};
}  // namespace detail

inline FiniteGroup WreathProduct::as_group() const {
  return FiniteGroup(std::make_shared<detail::WreathImpl>(*this),
                     gamma_.name() + " wr S" + std::to_string(n_));
}

inline WreathProduct wreath_product(FiniteGroup const& gamma, std::size_t n,
                                    Budget const& budget = {}) {
  detail::require(n >= 1, "wreath product needs n >= 1");
  std::uint64_t required = detail::capped_power(gamma.order(), n, budget.elements);
  for (std::size_t i = 2; i <= n && required <= budget.elements; ++i)
    required = required > (budget.elements + 1) / i ? budget.elements + 1 : required * i;
  budget.check_elements(required, gamma.name() + " wr S" + std::to_string(n));
  return WreathProduct(gamma, n);
}

// ---------------------------------------------------------------------------
// Coset space X = Gamma^n / Delta(Gamma)

// Points are right cosets h.Delta. The canonical representative has first
// coordinate equal to the identity; coordinates 2..n form a mixed-radix
// index with coordinate 2 most significant.
class CosetSpace {
 public:
  CosetSpace(FiniteGroup gamma, std::size_t n) : gamma_(std::move(gamma)), n_(n) {
    detail::require(n >= 1, "coset space needs n >= 1");
    size_ = 1;
    for (std::size_t i = 1; i < n; ++i) size_ *= gamma_.order();
  }

  FiniteGroup const& gamma() const noexcept { return gamma_; }
  std::size_t degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t base_index() const noexcept { return 0; }

  // Right-multiplies every coordinate by h_1^{-1}.
  std::vector<Elem> canonicalize(std::span<Elem const> h) const {
    std::vector<Elem> out(h.begin(), h.end());
    Elem const s = gamma_.inverse(h[0]);
    for (auto& x : out) x = gamma_.product(x, s);
    return out;
  }

  bool is_canonical(std::span<Elem const> h) const {
    return h.size() == n_ && h[0] == gamma_.identity();
  }

  std::uint64_t index(std::span<Elem const> canonical) const {
    detail::require(is_canonical(canonical), "point is not a canonical representative");
    std::uint64_t idx = 0;
    for (std::size_t i = 1; i < n_; ++i) idx = idx * gamma_.order() + canonical[i];
    return idx;
  }

  // Index of the coset of an arbitrary tuple; no allocation.
  std::uint64_t index_of(std::span<Elem const> h) const {
    Elem const s = gamma_.inverse(h[0]);
    std::uint64_t idx = 0;
    for (std::size_t i = 1; i < n_; ++i) idx = idx * gamma_.order() + gamma_.product(h[i], s);
    return idx;
  }

  void point_into(std::uint64_t index, std::span<Elem> out) const {
    for (std::size_t i = n_; i-- > 1;) {
      out[i] = static_cast<Elem>(index % gamma_.order());
      index /= gamma_.order();
    }
    out[0] = gamma_.identity();
  }

  std::vector<Elem> point(std::uint64_t index) const {
    detail::require(index < size_, "coset index out of range");
    std::vector<Elem> out(n_);
    point_into(index, out);
    return out;
  }

  // (delta, sigma) in Delta(Gamma) x S_n acting by x -> delta . sigma(x),
  // where sigma(x)_i = x_{sigma^{-1}(i)}; result canonicalised.
  std::vector<Elem> k_action(Elem delta, std::span<std::uint32_t const> sigma,
                             std::span<Elem const> x) const {
    std::vector<Elem> moved = permute_positions<Elem>(sigma, x);
    for (auto& v : moved) v = gamma_.product(delta, v);
    return canonicalize(moved);
  }

  // General element (g; sigma) of Gamma wr S_n acting on the left.
  std::vector<Elem> g_action(WreathElement const& g, std::span<Elem const> x) const {
    std::vector<Elem> moved = permute_positions<Elem>(g.perm_part, x);
    for (std::size_t i = 0; i < n_; ++i) moved[i] = gamma_.product(g.gamma_part[i], moved[i]);
    return canonicalize(moved);
  }

  // Canonical form of u^{-1} v, computed componentwise: the image of v under
  // the element (u^{-1}; id) that carries u to the base point.
  std::vector<Elem> translate_to_base(std::span<Elem const> u, std::span<Elem const> v) const {
    std::vector<Elem> w(n_);
    for (std::size_t i = 0; i < n_; ++i) w[i] = gamma_.product(gamma_.inverse(u[i]), v[i]);
    return canonicalize(w);
  }

 private:
  FiniteGroup gamma_;
  std::size_t n_;
  std::uint64_t size_;
};

inline CosetSpace coset_space(FiniteGroup const& gamma, std::size_t n,
                              std::uint64_t point_limit = Budget{}.elements) {
  detail::require(n >= 2, "coset space needs n >= 2");
  std::uint64_t const required = detail::capped_power(gamma.order(), n - 1, point_limit);
  if (required > point_limit)
    throw budget_exceeded(gamma.name() + "^" + std::to_string(n) +
                              "/diag: point budget exceeded",
                          required, point_limit);
  return CosetSpace(gamma, n);
}

}  // namespace gelfandpark

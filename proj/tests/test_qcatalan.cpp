#include <gtest/gtest.h>

#include <set>

#include <gelfandpark/qcatalan.hpp>

namespace gp = gelfandpark;

namespace {

std::set<std::string> digit_strings(std::vector<gp::WeightVector> const& ks) {
  std::set<std::string> out;
  for (auto const& k : ks) {
    std::string s;
    for (auto v : k.counts()) s += std::to_string(v);
    out.insert(s);
  }
  return out;
}

// All compositions of n into r parts, filtered by r | sum i k_i.
std::size_t brute_force_count(std::size_t n, std::size_t r) {
  std::size_t count = 0;
  std::vector<std::uint32_t> k(r, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == r) {
      k[pos] = static_cast<std::uint32_t>(left);
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < r; ++i) w += i * k[i];
      count += w % r == 0;
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      k[pos] = static_cast<std::uint32_t>(v);
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return count;
}

}  // namespace

TEST(WeightVector, DerivedFields) {
  auto const k = gp::WeightVector::parse("0,0,0,2,3");
  EXPECT_EQ(k.r(), 5u);
  EXPECT_EQ(k.n(), 5u);
  EXPECT_EQ(k.weighted_sum(), 18u);
  EXPECT_EQ(k.partition(), (std::vector<std::uint32_t>{4, 4, 4, 3, 3}));
  EXPECT_EQ(gp::WeightVector({2, 0, 1}).partition(), (std::vector<std::uint32_t>{2, 0, 0}));
  EXPECT_EQ(k.to_string(), "0,0,0,2,3");
  EXPECT_THROW(gp::WeightVector::parse("1,x"), gp::invalid_input);
  EXPECT_THROW(gp::WeightVector::parse(""), gp::invalid_input);
  EXPECT_THROW(gp::WeightVector::with_total({0, 2, 3}, 4), gp::invalid_input);
}

TEST(WeightVector, DOfThree) {
  auto const d3 = gp::enumerate_weight_vectors(3, 4);
  EXPECT_EQ(digit_strings(d3), (std::set<std::string>{"3000", "1101", "0210", "1020", "0012"}));
  EXPECT_EQ(d3.size(), 5u);
  std::vector<std::string> order;
  for (auto const& k : d3) order.push_back(k.to_string());
  EXPECT_EQ(order, (std::vector<std::string>{"3,0,0,0", "0,2,1,0", "1,0,2,0", "1,1,0,1", "0,0,1,2"}));
}

TEST(WeightVector, SmallCases) {
  EXPECT_EQ(digit_strings(gp::enumerate_weight_vectors(2, 3)), (std::set<std::string>{"200", "011"}));
  EXPECT_EQ(digit_strings(gp::enumerate_weight_vectors(1, 2)), (std::set<std::string>{"10"}));
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t r = 1; r <= 6; ++r)
      EXPECT_EQ(gp::enumerate_weight_vectors(n, r).size(), brute_force_count(n, r)) << n << "," << r;
}

TEST(WeightVector, DOfNCountsMatchZeroSumMultisets) {
  for (std::size_t n = 1; n <= 10; ++n) {
    auto const d = gp::enumerate_weight_vectors(n, n + 1);
    EXPECT_EQ(d.size(), gp::enumerate_zero_sum_multisets(n).size());
    EXPECT_EQ(d.size(), gp::catalan(n));
  }
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(gp::multinomial(gp::WeightVector({1, 1, 0, 1})), 6);
  EXPECT_EQ(gp::multinomial(gp::WeightVector({5, 0, 0})), 1);
  EXPECT_EQ(gp::multinomial(gp::WeightVector({2, 1, 0})), 3);
}

TEST(Multinomial, AgreesWithFactorialQuotient) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (auto const& k : gp::enumerate_weight_vectors(n, 4)) {
      gp::BigInt denom = 1;
      for (auto v : k.counts()) denom *= gp::factorial(v);
      EXPECT_EQ(gp::multinomial(k), gp::factorial(n) / denom);
    }
  gp::WeightVector const big({7, 9, 11, 13});
  gp::BigInt denom = gp::factorial(7) * gp::factorial(9) * gp::factorial(11) * gp::factorial(13);
  EXPECT_EQ(gp::multinomial(big), gp::factorial(40) / denom);
}

TEST(QCatalan, PublishedPolynomials) {
  EXPECT_EQ(gp::cq_polynomial(3), (gp::SparsePolynomial{{1, 1}, {3, 3}, {6, 1}}));
  EXPECT_EQ(gp::cq_polynomial(4), (gp::SparsePolynomial{{1, 1}, {4, 4}, {6, 2}, {12, 6}, {24, 1}}));
  EXPECT_EQ(gp::cq_polynomial(2), (gp::SparsePolynomial{{1, 1}, {2, 1}}));
  EXPECT_EQ(gp::cq_polynomial(3).to_string(), "q + 3q^3 + q^6");
  EXPECT_EQ(gp::sq_polynomial(3), gp::cq_polynomial(3));
  EXPECT_EQ(gp::sq_polynomial(1), (gp::SparsePolynomial{{1, 1}}));
}

TEST(QCatalan, EvaluationsAtOne) {
  for (std::size_t n = 1; n <= 10; ++n) {
    auto const st = gp::poly_stats(gp::cq_polynomial(n));
    EXPECT_EQ(st.value_at_one, gp::catalan(n));
    EXPECT_EQ(st.derivative_at_one, gp::power(n + 1, n - 1));
  }
  auto const c3 = gp::poly_stats(gp::cq_polynomial(3));
  EXPECT_EQ(c3.coefficients, (std::vector<gp::BigInt>{1, 3, 1}));
  auto const zero = gp::poly_stats(gp::SparsePolynomial{});
  EXPECT_EQ(zero.value_at_one, 0);
  EXPECT_EQ(zero.derivative_at_one, 0);
  EXPECT_TRUE(zero.coefficients.empty());
}

TEST(QCatalan, AlphaSeven) {
  std::vector<gp::BigInt> const expected{1, 7, 7, 7, 21, 42, 21, 56, 105, 35, 35, 70, 21, 1};
  EXPECT_EQ(gp::poly_stats(gp::cq_polynomial(7)).coefficients, expected);
}

TEST(QCatalan, LargestSupportedLength) {
  auto const st = gp::poly_stats(gp::cq_polynomial(12));
  EXPECT_EQ(st.value_at_one, gp::catalan(12));
  EXPECT_EQ(st.derivative_at_one, gp::power(13, 11));
}

TEST(QCatalan, Conjecture) {
  for (std::size_t n = 1; n <= 10; ++n) {
    auto const c = gp::verify_conjecture(n);
    EXPECT_TRUE(c.holds) << n;
    EXPECT_FALSE(c.first_exponent.has_value());
  }
  EXPECT_THROW(gp::verify_conjecture(13), gp::budget_exceeded);
}

TEST(QCatalan, FirstDifference) {
  gp::SparsePolynomial const a{{1, 1}, {3, 2}, {9, 1}};
  gp::SparsePolynomial const b{{1, 1}, {3, 2}, {5, 1}};
  EXPECT_EQ(gp::first_difference(a, b), gp::BigInt(5));
  EXPECT_FALSE(gp::first_difference(a, a).has_value());
}

TEST(QCatalan, PowerIdentity) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t r = 1; r <= 8; ++r) {
      auto const c = gp::check_r_power_identity(n, r);
      EXPECT_TRUE(c.holds) << n << "," << r;
      EXPECT_EQ(c.sum, gp::power(r, n - 1));
    }
  EXPECT_EQ(gp::check_r_power_identity(3, 4).sum, 16);
  EXPECT_THROW(gp::check_r_power_identity(0, 3), gp::invalid_input);
  gp::Budget tiny;
  tiny.elements = 10;
  EXPECT_THROW(gp::check_r_power_identity(8, 8, tiny), gp::budget_exceeded);
}

TEST(Polynomial, Arithmetic) {
  gp::SparsePolynomial p;
  p.add_term(3, 2);
  p.add_term(3, -2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
  p.add_term(0, -1);
  p.add_term(2, 5);
  EXPECT_EQ(p.to_string(), "-1 + 5q^2");
  auto const d = gp::poly_stats(p);
  EXPECT_EQ(d.value_at_one, 4);
  EXPECT_EQ(d.derivative_at_one, 10);
}

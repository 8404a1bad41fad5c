#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include <gelfandpark/spherical.hpp>

namespace gp = gelfandpark;

namespace {

// n! sum over all orderings of lambda, i.e. m_lambda times prod k_i!.
gp::Cyclotomic full_permutation_sum(gp::WeightVector const& k, std::vector<gp::Elem> const& h) {
  auto lambda = k.partition();
  gp::Cyclotomic out(static_cast<std::uint32_t>(k.r()));
  for (auto const& s : gp::all_perms(lambda.size())) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) e += static_cast<std::int64_t>(h[i]) * lambda[s[i]];
    out.add_power(e);
  }
  return out;
}

}  // namespace

TEST(MonomialSymmetric, MatchesFullPermutationSum) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const r = static_cast<std::uint32_t>(n + 1);
    gp::CosetSpace const space(gp::make_group(gp::GroupSpec::cyclic(r)), n);
    for (auto const& k : gp::enumerate_weight_vectors(n, r)) {
      std::int64_t prod = 1;
      for (auto v : k.counts()) prod *= gp::factorial(v).convert_to<std::int64_t>();
      for (std::uint64_t i = 0; i < space.size(); i += 1 + space.size() / 50) {
        auto const h = space.point(i);
        auto scaled = gp::monomial_symmetric_value(k, h);
        scaled *= prod;
        EXPECT_EQ(scaled, full_permutation_sum(k, h)) << k.to_string();
      }
    }
  }
}

TEST(MonomialSymmetric, Examples) {
  EXPECT_EQ(gp::monomial_symmetric_value(gp::WeightVector({3, 0, 0, 0}), std::vector<gp::Elem>{1, 2, 3}).as_integer(), 1);
  gp::WeightVector const k({0, 2, 3});
  EXPECT_EQ(gp::monomial_symmetric_value(k, std::vector<gp::Elem>(5, 0)).as_integer(), 10);
  EXPECT_EQ(gp::monomial_symmetric_value(gp::WeightVector({0, 1, 1}), std::vector<gp::Elem>{0, 0}).as_integer(), 2);
  EXPECT_THROW(gp::monomial_symmetric_value(k, std::vector<gp::Elem>{0, 0}), gp::invalid_input);
}

TEST(Zonal, OneAtBasePointAndTrivialEverywhere) {
  for (auto const& k : gp::enumerate_weight_vectors(4, 5)) {
    auto const v = gp::zonal_value(k, std::vector<gp::Elem>(4, 0));
    EXPECT_EQ(v.numerator.as_integer(), v.denominator);
  }
  gp::CosetSpace const space(gp::make_group("Z5"), 4);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    auto const z = gp::zonal_value(gp::WeightVector({4, 0, 0, 0, 0}), space.point(i)).to_complex();
    EXPECT_NEAR(static_cast<double>(z.real()), 1.0, 1e-12);
    EXPECT_NEAR(static_cast<double>(z.imag()), 0.0, 1e-12);
  }
  EXPECT_THROW(gp::zonal_value(gp::WeightVector({1, 1, 1, 0}), std::vector<gp::Elem>{0, 0, 0}), gp::invalid_input);
}

TEST(Zonal, DefinitionAgreesWithMonomialFormula) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const r = static_cast<std::uint32_t>(n + 1);
    gp::WreathProduct const w(gp::make_group(gp::GroupSpec::cyclic(r)), n);
    for (auto const& k : gp::enumerate_weight_vectors(n, r))
      for (gp::Elem e = 0; e < w.order(); ++e) {
        auto const x = w.decode(e);
        EXPECT_EQ(gp::zonal_via_definition(k, x), gp::zonal_value(k, x.gamma_part))
            << k.to_string() << " at " << w.label(x);
      }
  }
  gp::WreathProduct const w4(gp::make_group("Z5"), 4);
  for (auto const& k : gp::enumerate_weight_vectors(4, 5))
    for (gp::Elem e = 0; e < w4.order(); e += 613) {
      auto const x = w4.decode(e);
      EXPECT_EQ(gp::zonal_via_definition(k, x), gp::zonal_value(k, x.gamma_part));
    }
}

TEST(Zonal, OrthogonalityAndNorms) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const d = gp::enumerate_weight_vectors(n, n + 1);
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b) {
        auto const ip = gp::zonal_inner_product(d[a], d[b]);
        if (a == b) {
          double const inv_dim = 1.0 / gp::multinomial(d[a]).convert_to<double>();
          EXPECT_NEAR(static_cast<double>(ip.real()), inv_dim, 1e-9);
        } else {
          EXPECT_LT(static_cast<double>(std::abs(ip)), 1e-9) << d[a].to_string() << " vs " << d[b].to_string();
        }
      }
  }
}

TEST(Zonal, BoundedAndPermutationInvariant) {
  std::size_t const n = 5;
  gp::CosetSpace const space(gp::make_group("Z6"), n);
  for (auto const& k : gp::enumerate_weight_vectors(n, 6))
    for (std::uint64_t i = 0; i < space.size(); i += 13) {
      auto const x = space.point(i);
      auto const v = gp::zonal_value(k, x);
      EXPECT_LE(static_cast<double>(std::abs(v.to_complex())), 1.0 + 1e-12);
      auto y = x;
      std::reverse(y.begin(), y.end());
      EXPECT_EQ(gp::zonal_value(k, y), v);
    }
}

TEST(Census, PublishedTerms) {
  std::vector<std::size_t> got;
  for (std::size_t n = 2; n <= 5; ++n) got.push_back(gp::realness_census(n).real_count);
  EXPECT_EQ(got, (std::vector<std::size_t>{2, 3, 6, 10}));
}

TEST(Census, OrbitRepresentativesMatchEveryPoint) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const fast = gp::realness_census(n, false, 2);
    auto const slow = gp::realness_census(n, true, 2);
    ASSERT_EQ(fast.entries.size(), slow.entries.size());
    for (std::size_t i = 0; i < fast.entries.size(); ++i) EXPECT_EQ(fast.entries[i].real, slow.entries[i].real);
    EXPECT_EQ(fast.total, gp::catalan(n));
  }
}

TEST(Census, WorkerCountDoesNotChangeResult) {
  auto const one = gp::realness_census(6, false, 1);
  auto const many = gp::realness_census(6, false, 4);
  EXPECT_EQ(one.real_count, many.real_count);
}

TEST(Cloud, FigureWeightVector) {
  auto const k = gp::WeightVector::parse("0,0,0,2,3");
  ASSERT_FALSE(gp::descends_to_quotient(k));
  EXPECT_THROW(gp::value_cloud(k), gp::invalid_input);
  auto const padded = k.padded(6);
  EXPECT_EQ(padded, gp::WeightVector::parse("0,0,0,2,3,0"));
  EXPECT_TRUE(gp::descends_to_quotient(padded));
  EXPECT_THROW(k.padded(4), gp::invalid_input);
}

TEST(Cloud, ConjugationClosedAndNonReal) {
  auto const k = gp::WeightVector::parse("0,0,0,2,3,0");
  auto const cloud = gp::value_cloud(k, {}, 3);
  ASSERT_EQ(cloud.size(), 1296u);
  std::vector<std::pair<double, double>> pts, conj;
  bool non_real = false;
  for (auto const& p : cloud) {
    pts.emplace_back(std::round(p.re * 1e9), std::round(p.im * 1e9));
    conj.emplace_back(std::round(p.re * 1e9), std::round(-p.im * 1e9));
    non_real = non_real || std::fabs(p.im) > 1e-9;
  }
  std::sort(pts.begin(), pts.end());
  std::sort(conj.begin(), conj.end());
  EXPECT_TRUE(non_real);
  EXPECT_EQ(pts, conj);
  EXPECT_EQ(cloud.front().re, 1.0);
}

TEST(Cloud, AllTuplesCoverTheSameValues) {
  auto const k = gp::WeightVector::parse("0,0,0,2,3").padded(6);
  auto const cosets = gp::value_cloud(k);
  auto const tuples = gp::value_cloud(k, {}, 2, true);
  ASSERT_EQ(tuples.size(), 7776u);
  // Tuple (0, h_2, ..., h_n) has index equal to its coset index.
  for (auto const& p : cosets) {
    EXPECT_EQ(tuples[p.index].re, p.re);
    EXPECT_EQ(tuples[p.index].im, p.im);
  }
  // Diagonal shifts do not change the value.
  for (std::uint64_t i = 0; i < 7776; i += 11) {
    std::uint64_t shifted = 0;
    for (std::uint64_t rest = i, place = 1; place < 7776; rest /= 6, place *= 6) shifted += ((rest % 6 + 1) % 6) * place;
    EXPECT_NEAR(tuples[shifted].re, tuples[i].re, 1e-12);
    EXPECT_NEAR(tuples[shifted].im, tuples[i].im, 1e-12);
  }
}

TEST(Cloud, TrivialAndBudget) {
  for (auto const& p : gp::value_cloud(gp::WeightVector({3, 0, 0, 0}))) {
    EXPECT_EQ(p.re, 1.0);
    EXPECT_EQ(p.im, 0.0);
  }
  gp::Budget tiny;
  tiny.points = 100;
  EXPECT_THROW(gp::value_cloud(gp::WeightVector::parse("0,0,0,2,3,0"), tiny), gp::budget_exceeded);
}

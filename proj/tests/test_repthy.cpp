#include <gtest/gtest.h>

#include <map>

#include <gelfandpark/repthy.hpp>

namespace gp = gelfandpark;

namespace {

struct Column {
  std::size_t target;
  std::int64_t power;
};

std::vector<Column> matrix_of(gp::MonomialModule const& m, gp::WreathElement const& x) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto const img = m.act(x.gamma_part, x.perm_part, i);
    auto const r = static_cast<std::int64_t>(m.r());
    cols.push_back({img.target, ((img.power % r) + r) % r});
  }
  return cols;
}

void expect_homomorphism(gp::WeightVector const& k, std::size_t stride) {
  SCOPED_TRACE(k.to_string());
  gp::MonomialModule const m(k);
  gp::WreathProduct const w(gp::make_group(gp::GroupSpec::cyclic(static_cast<std::uint32_t>(k.r()))), k.n());
  auto const r = static_cast<std::int64_t>(k.r());
  for (gp::Elem a = 0; a < w.order(); a += static_cast<gp::Elem>(stride))
    for (gp::Elem b = 0; b < w.order(); b += static_cast<gp::Elem>(stride)) {
      auto const x = w.decode(a), y = w.decode(b);
      auto const mx = matrix_of(m, x), my = matrix_of(m, y), mxy = matrix_of(m, w.multiply(x, y));
      for (std::size_t i = 0; i < m.dim(); ++i) {
        auto const mid = my[i];
        EXPECT_EQ(mxy[i].target, mx[mid.target].target);
        EXPECT_EQ(mxy[i].power, (mid.power + mx[mid.target].power) % r);
      }
    }
}

}  // namespace

TEST(MonomialModule, Basis) {
  gp::MonomialModule const m(gp::WeightVector({1, 1, 0, 1}));
  EXPECT_EQ(m.dim(), 6u);
  EXPECT_EQ(m.basis().front(), (std::vector<std::uint32_t>{0, 1, 3}));
  EXPECT_EQ(m.basis().back(), (std::vector<std::uint32_t>{3, 1, 0}));
  EXPECT_EQ(m.index_of(std::vector<std::uint32_t>{1, 3, 0}), 3u);
  EXPECT_THROW(m.index_of(std::vector<std::uint32_t>{1, 1, 0}), gp::invalid_input);
}

TEST(MonomialModule, ActionIsAHomomorphism) {
  expect_homomorphism(gp::WeightVector({0, 1, 1}), 1);
  expect_homomorphism(gp::WeightVector({1, 1}), 1);
  expect_homomorphism(gp::WeightVector({1, 1, 1}), 1);
  expect_homomorphism(gp::WeightVector({1, 0, 2}), 1);
  expect_homomorphism(gp::WeightVector({1, 1, 0, 1}), 7);
  expect_homomorphism(gp::WeightVector({0, 2, 1, 1}), 29);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(gp::module_dimension(gp::WeightVector({3, 0, 0, 0})), 1);
  EXPECT_EQ(gp::module_dimension(gp::WeightVector({1, 1, 0, 1})), 6);
  EXPECT_THROW(gp::module_dimension(gp::WeightVector({0, 2, 3}), 4), gp::invalid_input);
  EXPECT_EQ(gp::module_dimension(gp::WeightVector({0, 2, 3}), 5), 10);
}

TEST(Dimension, QuotientConstituentsFillTheInducedModule) {
  for (std::size_t n = 1; n <= 5; ++n) {
    gp::BigInt total = 0;
    for (auto const& k : gp::induced_decomposition(n, n + 1, true)) total += gp::module_dimension(k);
    EXPECT_EQ(total, gp::power(n + 1, n - 1));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 1; r <= 4; ++r) {
      gp::BigInt total = 0;
      for (auto const& k : gp::induced_decomposition(n, r, false)) total += gp::module_dimension(k);
      EXPECT_EQ(total, gp::power(r, n));
    }
}

TEST(Character, Examples) {
  std::vector<gp::Elem> const g{1, 2, 3};
  gp::Perm const sigma{2, 0, 1};
  EXPECT_EQ(gp::character_value(gp::WeightVector({3, 0, 0, 0}), g, sigma).as_integer(), 1);
  EXPECT_EQ(gp::character_value(gp::WeightVector({1, 1, 0, 1}), std::vector<gp::Elem>{0, 0, 0},
                                gp::identity_perm(3)).as_integer(),
            6);
  EXPECT_EQ(gp::character_value(gp::WeightVector({1, 1}), std::vector<gp::Elem>{0, 1},
                                gp::identity_perm(2)).as_integer(),
            0);
  EXPECT_THROW(gp::character_value(gp::WeightVector({1, 1}), std::vector<gp::Elem>{0, 2},
                                   gp::identity_perm(2)),
               gp::invalid_input);
  EXPECT_THROW(gp::character_value(gp::WeightVector({1, 1}), std::vector<gp::Elem>{0, 1},
                                   gp::Perm{0, 0}),
               gp::invalid_input);
}

TEST(Character, ClassFunction) {
  gp::WreathProduct const w(gp::make_group("Z3"), 3);
  for (auto const& k : {gp::WeightVector({1, 1, 1}), gp::WeightVector({0, 2, 1}), gp::WeightVector({3, 0, 0})}) {
    gp::MonomialModule const m(k);
    for (gp::Elem a = 0; a < w.order(); a += 5)
      for (gp::Elem b = 0; b < w.order(); b += 11) {
        auto const x = w.decode(a), y = w.decode(b);
        auto const conj = w.multiply(w.multiply(y, x), w.inverse(y));
        EXPECT_EQ(gp::character_value(m, x.gamma_part, x.perm_part),
                  gp::character_value(m, conj.gamma_part, conj.perm_part));
      }
  }
}

TEST(Character, ConstantOnDiagonalShiftsWhenDescending) {
  gp::WeightVector const k({0, 2, 1, 0});  // weighted sum 4
  ASSERT_TRUE(gp::descends_to_quotient(k));
  gp::MonomialModule const m(k);
  for (auto const& sigma : gp::all_perms(3))
    for (gp::Elem a = 0; a < 4; ++a)
      for (gp::Elem b = 0; b < 4; ++b)
        for (gp::Elem c = 0; c < 4; ++c)
          for (gp::Elem s = 1; s < 4; ++s) {
            std::vector<gp::Elem> const g{a, b, c};
            std::vector<gp::Elem> const h{(a + s) % 4, (b + s) % 4, (c + s) % 4};
            EXPECT_EQ(gp::character_value(m, g, sigma), gp::character_value(m, h, sigma));
          }
}

TEST(Descent, Examples) {
  EXPECT_TRUE(gp::descends_to_quotient(gp::WeightVector({3, 0, 0, 0})));
  EXPECT_FALSE(gp::descends_to_quotient(gp::WeightVector({1, 1, 1, 0})));
  EXPECT_TRUE(gp::descends_to_quotient(gp::WeightVector({0, 0, 1, 2})));
}

TEST(Decomposition, Sizes) {
  EXPECT_EQ(gp::induced_decomposition(3, 4, true), gp::enumerate_weight_vectors(3, 4));
  EXPECT_EQ(gp::induced_decomposition(3, 4, false).size(), 20u);
  auto const one = gp::induced_decomposition(1, 2, true);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], gp::WeightVector({1, 0}));
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(gp::induced_decomposition(n, n + 1, true).size(), gp::catalan(n));
}

TEST(Multiplicity, EveryConstituentOnce) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r : {n, n + 1}) {
      for (auto const& k : gp::induced_decomposition(n, r, false))
        EXPECT_EQ(gp::multiplicity_in_induced(k, false), 1u) << k.to_string();
      for (auto const& k : gp::induced_decomposition(n, r, true))
        EXPECT_EQ(gp::multiplicity_in_induced(k, true), 1u) << k.to_string();
    }
  EXPECT_THROW(gp::multiplicity_in_induced(gp::WeightVector({1, 1, 1, 0}), true), gp::invalid_input);
}

TEST(SnCharacters, Examples) {
  EXPECT_EQ(gp::sn_character({3}, {2, 1}), 1);
  EXPECT_EQ(gp::sn_character({1, 1, 1}, {2, 1}), -1);
  EXPECT_EQ(gp::sn_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(gp::sn_character({2, 1}, {3}), -1);
  EXPECT_EQ(gp::sn_character({2, 2}, {2, 2}), 2);
  EXPECT_THROW(gp::sn_character({2, 1}, {2, 2}), gp::invalid_input);
}

TEST(SnCharacters, Orthogonality) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    auto const parts = gp::partitions_of(n);
    gp::BigInt const nf = gp::factorial(n);
    for (auto const& mu : parts)
      for (auto const& nu : parts) {
        gp::BigInt row = 0;
        for (auto const& rho : parts)
          row += (nf / gp::centralizer_order(rho)) * gp::sn_character(mu, rho) * gp::sn_character(nu, rho);
        EXPECT_EQ(row, mu == nu ? nf : gp::BigInt(0));
      }
    for (auto const& a : parts)
      for (auto const& b : parts) {
        gp::BigInt col = 0;
        for (auto const& mu : parts) col += gp::sn_character(mu, a) * gp::sn_character(mu, b);
        EXPECT_EQ(col, a == b ? gp::centralizer_order(a) : gp::BigInt(0));
      }
  }
}

TEST(SnCharacters, DimensionsSquareSumToOrder) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    gp::BigInt s = 0;
    gp::Partition const id(n, 1);
    for (auto const& mu : gp::partitions_of(n)) {
      auto const d = gp::sn_character(mu, id);
      EXPECT_GT(d, 0);
      s += gp::BigInt(d) * d;
    }
    EXPECT_EQ(s, gp::factorial(n));
  }
}

TEST(SnCharacters, PermOfTypeHasThatType) {
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (auto const& rho : gp::partitions_of(n)) EXPECT_EQ(gp::cycle_type(gp::perm_of_type(rho)), rho);
}

TEST(OrbitTable, LengthThree) {
  auto const t = gp::orbit_multiplicity_table(3);
  gp::Partition const triv{3}, two{2, 1}, sign{1, 1, 1};
  std::map<std::string, std::array<std::uint64_t, 3>> const expected{
      {"111", {1, 0, 0}}, {"112", {1, 0, 1}}, {"113", {1, 0, 1}}, {"122", {1, 0, 1}}, {"123", {1, 1, 2}}};
  ASSERT_EQ(t.rows.size(), 5u);
  for (auto const& [rep, m] : expected) {
    EXPECT_EQ(t.at(rep, triv), m[0]) << rep;
    EXPECT_EQ(t.at(rep, sign), m[1]) << rep;
    EXPECT_EQ(t.at(rep, two), m[2]) << rep;
  }
}

TEST(OrbitTable, TrivialOnceAndDimensionsAddUp) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    auto const t = gp::orbit_multiplicity_table(n);
    for (auto const& row : t.rows) {
      EXPECT_EQ(t.at(gp::to_string(row.representative.entries), gp::Partition{n}), 1u);
      std::uint64_t dim = 0;
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        dim += row.multiplicities[c] * static_cast<std::uint64_t>(gp::sn_character(t.columns[c], gp::Partition(n, 1)));
      EXPECT_EQ(dim, row.orbit_size);
    }
  }
}

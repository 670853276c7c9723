#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mrep/downgrade.hpp"

namespace mrep {
namespace {

TEST(Downgrade, ReplacesFirstTVariable) {
  auto sys = ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"X1^2", "X2^2", "X1*X2"});
  // X1 * T0 * T2 -> X1 * f0 * T2 = X1^3 T2
  Scalar one(1L);
  auto p = BigradedPoly::from_terms(2, 3, 1, 2, Field::rationals(), {{Monomial{1, 0}, Monomial{1, 0, 1}, one}});
  auto q = downgrade_once(p, sys);
  EXPECT_EQ(q.mu(), 3);
  EXPECT_EQ(q.ell(), 1);
  auto expect = BigradedPoly::from_terms(2, 3, 3, 1, Field::rationals(), {{Monomial{3, 0}, Monomial{0, 0, 1}, one}});
  EXPECT_EQ(q, expect);
}

TEST(Downgrade, KoszulMembership) {
  auto sys = fixtures::random_forms(2, 2, 3);
  // f1 T0 - f0 T1 is Koszul; T0 alone is not even a syzygy
  std::vector<BiTerm> terms;
  for (const auto& [m, c] : sys.form(1).terms()) terms.push_back({m, Monomial{1, 0, 0}, c});
  for (const auto& [m, c] : sys.form(0).terms()) terms.push_back({m, Monomial{0, 1, 0}, -c});
  auto k = BigradedPoly::from_terms(2, 3, 2, 1, Field::rationals(), terms);
  EXPECT_TRUE(in_koszul_slice(sys, k));
  auto t0 = BigradedPoly::from_terms(2, 3, 2, 1, Field::rationals(), {{Monomial{2, 0}, Monomial{1, 0, 0}, Scalar(1L)}});
  EXPECT_FALSE(in_koszul_slice(sys, t0));
  KoszulClass cls{k.scaled(Scalar(2L))};
  EXPECT_TRUE(cls.same_as(k, sys));
}

class Lambda : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(Lambda, InjectiveAndBijectiveAtThreshold) {
  auto [n, d] = GetParam();
  auto sys = fixtures::random_forms(n, d, 60 + n + d);
  KoszulLab lab(sys);
  const int mu0 = lab.mu0();
  for (int mu = 0; mu <= mu0 + 2; ++mu) {
    auto v = lambda_check(lab, mu, 2);
    EXPECT_TRUE(v.injective) << mu;
    if (mu >= mu0) EXPECT_TRUE(v.bijective) << mu;
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, Lambda, ::testing::Values(std::tuple{2, 2}, std::tuple{2, 3}, std::tuple{2, 4}, std::tuple{3, 2}));

TEST(Upgrade, RoundTripModLowerOrder) {
  auto sys = fixtures::random_forms(2, 5, 17);
  KoszulLab lab(sys);
  for (int mu = lab.mu0(); mu <= lab.mu0() + 1; ++mu) {
    auto nc = new_columns(lab, mu, 2);
    ASSERT_GT(nc.reps.size(), 0u);
    auto basis = bidegree_basis(sys, mu, 2);
    EchelonSpan low(basis.size(), sys.field());
    for (const auto& w : lower_order_slice(sys, mu, 2)) low.add(w);
    for (const auto& q : nc.reps) {
      auto back = upgrade(lab, mu, downgrade_once(q, sys));
      EXPECT_TRUE(substitute_T(back, sys).is_zero());
      EXPECT_TRUE(low.contains(basis.coords(back - q)));
    }
  }
}

}  // namespace
}  // namespace mrep

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mrep/errors.hpp"
#include "mrep/implicitize.hpp"
#include "mrep/syzygy.hpp"

namespace mrep {
namespace {

TEST(LinearSyzygies, TrivialLinearForms) {
  auto sys = ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"X1", "X2", "X1+X2"}, Independence::allow_dependent);
  auto b = linear_syzygies(sys, 0);
  ASSERT_EQ(b.vectors.size(), 1u);
  EXPECT_EQ(b.koszul_dim, 0u);
  const auto& a = b.vectors[0].a;
  // proportional to (1, 1, -1)
  Scalar s = a[0].leading().second;
  EXPECT_EQ(a[0], MultiPoly::constant(2, s));
  EXPECT_EQ(a[1], MultiPoly::constant(2, s));
  EXPECT_EQ(a[2], MultiPoly::constant(2, -s));
}

TEST(LinearSyzygies, SixBasePointsDimensions) {
  auto sys = fixtures::six_base_points();
  EXPECT_EQ(linear_syzygies(sys, 0).vectors.size(), 0u);
  EXPECT_EQ(linear_syzygies(sys, 1).vectors.size(), 3u);
  EXPECT_EQ(linear_syzygies(sys, 2).vectors.size(), 9u);
  for (const auto& v : linear_syzygies(sys, 2).vectors) {
    MultiPoly s(3, Field::rationals());
    for (std::size_t i = 0; i < 4; ++i) s += v.a[i] * sys.form(i);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(LinearSyzygies, KoszulPartForGeneralForms) {
  auto sys = fixtures::random_forms(2, 2, 4);
  // f_i T_j - f_j T_i for i < j: three independent Koszul syzygies with coefficients of degree d
  EXPECT_EQ(linear_syzygies(sys, 2).koszul_dim, 3u);
  EXPECT_EQ(linear_syzygies(sys, 1).koszul_dim, 0u);
}

TEST(BidegreeBasis, CoordinateConvention) {
  BidegreeBasis b(3, 4, 1, 2);
  EXPECT_EQ(b.size(), 3u * 10u);
  for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(b.index(b.x_of(k), b.t_of(k)), k);
}

TEST(Matrix, SixBasePointsShapes) {
  auto sys = fixtures::six_base_points();
  KoszulLab lab(sys);
  auto m0 = build_matrix(lab, 0);
  EXPECT_EQ(m0.nrows(), 1u);
  EXPECT_EQ(m0.ncols(), 1u);
  auto m1 = build_matrix(lab, 1);
  EXPECT_EQ(m1.nrows(), 3u);
  EXPECT_EQ(m1.ncols(), 4u);
  EXPECT_EQ(m1.count_tdegree(1), 3u);
  EXPECT_EQ(m1.count_tdegree(2), 1u);
  auto m2 = build_matrix(lab, 2, 1);
  EXPECT_EQ(m2.nrows(), 6u);
  EXPECT_EQ(m2.ncols(), 9u);
  for (const auto* m : {&m0, &m1, &m2}) EXPECT_TRUE(columns_are_equations(*m, sys));
  EXPECT_NE(matrix_text(m1).find("3 x 4"), std::string::npos);
}

TEST(NewColumns, SixBasePointsCounts) {
  auto sys = fixtures::six_base_points();
  KoszulLab lab(sys);
  auto q = new_columns(lab, 1, 2);
  EXPECT_EQ(q.count, 1u);
  EXPECT_EQ(q.predicted_rank, 1u);
  ASSERT_EQ(q.reps.size(), 1u);
  EXPECT_TRUE(substitute_T(q.reps[0], sys).is_zero());
  EXPECT_EQ(new_columns(lab, 0, 3).count, 1u);
}

TEST(NewColumns, HilbertBurchHasNoQuadraticColumns) {
  auto sys = fixtures::hilbert_burch(2);
  KoszulLab lab(sys);
  for (int mu = 0; mu <= 2; ++mu) EXPECT_EQ(new_columns(lab, mu, 2).count, 0u) << mu;
}

TEST(Resolution, GeneralQuadricsN3) {
  auto sys = fixtures::random_forms(3, 2, 21);
  KoszulLab lab(sys);
  ASSERT_EQ(lab.mu0(), 1);
  auto r = resolution_ranks(lab, 1);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.b.at(1), 0);
  EXPECT_EQ(r.beta.at(1), 2u);
  EXPECT_EQ(r.beta.at(2), 1u);
  auto m = build_matrix(lab, 1);
  ASSERT_EQ(m.nrows(), 3u);
  ASSERT_EQ(m.ncols(), 3u);
  // column T-degrees 1, 1, 2 give a determinant of degree 4
  auto det = det_square(m);
  EXPECT_EQ(det.degree(), 4);
  EXPECT_TRUE(verify_implicit(det, sys).vanishes);
}

TEST(Resolution, FormulaMatchesDirectOnSmallGrid) {
  for (auto [n, d] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    auto sys = fixtures::random_forms(n, d, 31 + n + d);
    KoszulLab lab(sys);
    for (int mu = lab.mu0(); mu <= lab.mu0() + 1; ++mu) EXPECT_TRUE(resolution_ranks(lab, mu).consistent());
  }
}

TEST(Tuning, TunedMuInRange) {
  auto sys = fixtures::random_forms(3, 2, 8);
  KoszulLab lab(sys);
  // max((n-l)(d-1) - (l-1), mu0) with n=3, d=2, mu0=1
  EXPECT_EQ(tuned_mu(lab, 1), 2);
  EXPECT_EQ(tuned_mu(lab, 2), 1);
  EXPECT_THROW(tuned_mu(lab, 3), ValidationError);
}

TEST(ThreeVariableRankCondition, ConditionForN3) {
  for (int d : {2, 3}) {
    auto sys = fixtures::random_forms(3, d, 40 + d);
    KoszulLab lab(sys);
    auto c = cgz_condition(lab);
    EXPECT_EQ(c.dim_Z1, static_cast<std::size_t>(d));
    EXPECT_TRUE(c.condition);
    EXPECT_EQ(c.mu0, d - 1);
    EXPECT_TRUE(c.square);
  }
}

}  // namespace
}  // namespace mrep

#include <gtest/gtest.h>

#include "mrep/appendix.hpp"
#include "mrep/errors.hpp"
#include "mrep/parse.hpp"

namespace mrep {
namespace {

TEST(Cube, DimensionsMatchModelAndAreSymmetric) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m) {
      CubeAlgebra a(n, m);
      for (int k = -1; k <= a.top() + 1; ++k) {
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(a.dim(k))), a.model_dim(k));
        if (k >= 0 && k <= a.top()) EXPECT_EQ(a.dim(k), a.dim(a.top() - k));
      }
      EXPECT_EQ(a.dim(a.top()), 1u);
    }
}

TEST(Lefschetz, Examples) {
  auto v = lefschetz_check(2, 2, 0, 2);
  EXPECT_EQ(v.source_dim, 1u);
  EXPECT_EQ(v.target_dim, 1u);
  EXPECT_TRUE(v.injective);
  auto s = lefschetz_check(2, 2, 1, 1);
  EXPECT_TRUE(s.surjective);
  EXPECT_TRUE(s.expected_surj);
  auto id = lefschetz_check(3, 3, 2, 0);
  EXPECT_TRUE(id.injective && id.surjective);
  // injective although 2k+t exceeds d: the flags are implications only
  auto one = lefschetz_check(1, 3, 1, 1);
  EXPECT_FALSE(one.expected_inj);
  EXPECT_TRUE(one.injective);
}

TEST(Lefschetz, FullGrid) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (const auto& p : lefschetz_grid(n, m)) EXPECT_TRUE(p.pass) << n << " " << m << " " << p.label;
}

TEST(Signs, Examples) {
  auto v = sign_pattern(3, 3);
  EXPECT_EQ(v.c, (IntSeries{1, 2, 3, 1, -1, -3, -2, -1}));
  auto w = sign_pattern(2, 2);
  EXPECT_EQ(w.c, (IntSeries{1, 1, -1, -1}));
  // (1-t^2)^3/(1-t)^2 = (1+t)^2 (1-t^2): middle coefficient of an even length sequence
  auto e = sign_pattern(3, 2);
  EXPECT_EQ(e.c, (IntSeries{1, 2, 0, -2, -1}));
  EXPECT_TRUE(e.middle_zero);
  EXPECT_THROW(sign_pattern(1, 3), ValidationError);
}

TEST(Signs, Grid) {
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned d = 2; d <= 6; ++d) EXPECT_TRUE(sign_pattern(n, d, false).holds()) << n << " " << d;
}

// Polynomial part of (d/dx)^(t-j) (x^(m+t-j) (x+a)^(-j)), from the Laurent expansion
// (x+a)^(-j) = sum_i C(-j, i) a^i x^(-j-i), differentiated term by term.
MultiPoly laurent_pj(unsigned m, unsigned t, unsigned j) {
  std::vector<Term> terms;
  for (unsigned i = 0; i <= m + t; ++i) {
    long e = static_cast<long>(m + t) - 2 * static_cast<long>(j) - static_cast<long>(i);  // exponent before d/dx
    mpz_class c = binomial(j + i - 1, i);
    if (i % 2) c = -c;
    long ex = e;
    for (unsigned s = 0; s < t - j; ++s) c *= ex--;  // falling factorial
    if (c == 0 || ex < 0) continue;
    terms.emplace_back(Monomial{static_cast<unsigned>(ex), i}, Scalar(mpq_class(c)));
  }
  return MultiPoly::from_terms(2, Field::rationals(), std::move(terms));
}

TEST(NilpotentShift, PjExamplesAndLaurentOracle) {
  std::vector<std::string> xa{"x", "a"};
  EXPECT_EQ(print_poly(oesterle_Pj(2, 1, 1), xa), "x - a");
  EXPECT_EQ(print_poly(oesterle_Pj(1, 4, 1), xa), "6");
  EXPECT_EQ(print_poly(oesterle_Pj(3, 1, 1), xa), "x^2 - x*a + a^2");
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned t = 1; t <= 5; ++t)
      for (unsigned j = 1; j <= std::min(m, t); ++j) {
        auto p = oesterle_Pj(m, t, j);
        EXPECT_EQ(p, laurent_pj(m, t, j)) << m << " " << t << " " << j;
        EXPECT_EQ(p.degree(), static_cast<int>(m - j));
        EXPECT_GT(p.leading().second.sign(), 0);
      }
  EXPECT_THROW(oesterle_Pj(2, 1, 2), ValidationError);
  EXPECT_THROW(oesterle_Pj(2, 3, 0), ValidationError);
}

TEST(NilpotentShift, AnnihilationExamplesAndSweep) {
  EXPECT_TRUE(annihilation_check(1, 2, 1).annihilated);
  EXPECT_EQ(annihilation_check(1, 2, 1).a_order, 2u);
  EXPECT_TRUE(annihilation_check(2, 1, 1).annihilated);
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned t = 1; t <= 5; ++t)
      for (unsigned j = 1; j <= std::min(m, t); ++j) EXPECT_TRUE(annihilation_check(m, t, j, false).annihilated);
}

TEST(NilpotentShift, KernelStructure) {
  auto a = kernel_structure_check(1, 1, 1);
  EXPECT_EQ(a.observed, 1u);  // a = 0 in Q[a]/(a): x + a acts as 0 on A[x]/x
  auto b = kernel_structure_check(2, 1, 2);
  EXPECT_EQ(b.predicted, 2u);
  EXPECT_EQ(b.observed, 2u);
  EXPECT_EQ(kernel_structure_check(3, 0, 4).observed, 0u);
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned t = 0; t <= 3; ++t)
      for (unsigned N = 1; N <= 4; ++N) EXPECT_TRUE(kernel_structure_check(m, t, N, false).holds()) << m << t << N;
}

}  // namespace
}  // namespace mrep

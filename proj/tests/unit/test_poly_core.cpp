#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mrep/errors.hpp"
#include "mrep/param_system.hpp"
#include "mrep/series.hpp"

namespace mrep {
namespace {

MultiPoly random_poly(std::size_t n, int maxdeg, std::mt19937_64& rng, const Field& f) {
  std::uniform_int_distribution<long> c(-5, 5);
  std::vector<Term> terms;
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomial_basis(n, d))
      if (rng() % 3 == 0) terms.emplace_back(m, f.from_int(c(rng)));
  return MultiPoly::from_terms(n, f, std::move(terms));
}

TEST(Field, RationalArithmetic) {
  Scalar a(mpq_class(1, 3)), b(mpq_class(-2, 5));
  EXPECT_EQ(a + b, Scalar(mpq_class(-1, 15)));
  EXPECT_EQ(a * b, Scalar(mpq_class(-2, 15)));
  EXPECT_EQ(a / b, Scalar(mpq_class(-5, 6)));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Field, PrimeFieldArithmetic) {
  Field f = Field::prime(7);
  Scalar a = f.from_int(3), b = f.from_int(5);
  EXPECT_EQ(a + b, f.from_int(1));
  EXPECT_EQ(a * b, f.from_int(1));
  EXPECT_EQ(a.inverse(), b);
  EXPECT_EQ(f.from_mpq(mpq_class(1, 2)), f.from_int(4));
  EXPECT_THROW(Field::prime(9), ValidationError);
  EXPECT_THROW(f.from_mpq(mpq_class(1, 7)), ValidationError);
}

TEST(Monomial, BasisCountsAndOrder) {
  EXPECT_EQ(monomial_count(3, 2), 6u);
  EXPECT_EQ(monomial_count(4, 3), 20u);
  EXPECT_EQ(monomial_count(3, -1), 0u);
  auto b = monomial_basis(2, 2);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], (Monomial{2, 0}));
  EXPECT_EQ(b[2], (Monomial{0, 2}));
}

class RingAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RingAxioms, HoldOnRandomPolynomials) {
  std::mt19937_64 rng(GetParam());
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    auto a = random_poly(3, 3, rng, f), b = random_poly(3, 3, rng, f), c = random_poly(3, 2, rng, f);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * MultiPoly::constant(3, f.one()), a);
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingAxioms, ::testing::Values(1, 2, 3, 4, 5, 6, 7, 8));

TEST(Parse, RoundTripAndErrors) {
  Ambient amb{{"X1", "X2", "X3"}, Field::rationals()};
  auto p = parse_poly("X2^2*(X1+X3) - 1/2*X1^3", amb);
  EXPECT_EQ(print_poly(p, amb.names), "-1/2*X1^3 + X1*X2^2 + X2^2*X3");
  EXPECT_EQ(parse_poly(print_poly(p, amb.names), amb), p);
  EXPECT_EQ(parse_poly("(X1+X2)^2", amb), parse_poly("X1^2 + 2*X1*X2 + X2^2", amb));
  EXPECT_THROW(parse_poly("X1 + Y", amb), ParseError);
  EXPECT_THROW(parse_poly("X1 +", amb), ParseError);
  EXPECT_THROW(parse_poly("(X1", amb), ParseError);
}

TEST(Poly, DerivativeAndCompose) {
  Ambient amb{{"x", "y"}, Field::rationals()};
  auto p = parse_poly("x^3*y + 2*y^2", amb);
  EXPECT_EQ(p.derivative(0), parse_poly("3*x^2*y", amb));
  EXPECT_EQ(p.derivative(1), parse_poly("x^3 + 4*y", amb));
  auto q = p.compose({parse_poly("x+y", amb), parse_poly("x", amb)});
  EXPECT_EQ(q, parse_poly("(x+y)^3*x + 2*x^2", amb));
}

TEST(Series, ExpansionOracles) {
  // (1 - t^2)^2 / (1 - t) = (1 - t^2)(1 + t)
  auto c = poly_series_coeffs(series_pow(one_minus_t_pow(2), 2), one_minus_t_pow(1), 10);
  EXPECT_EQ(c, (IntSeries{1, 1, -1, -1}));
  // general forms n=3, d=2: (1 - t^2)^4 / (1 - t)^3
  auto a = poly_series_coeffs(series_pow(one_minus_t_pow(2), 4), series_pow(one_minus_t_pow(1), 3), 10);
  EXPECT_EQ(a, (IntSeries{1, 3, 2, -2, -3, -1}));
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 7), 0);
}

TEST(ParamSystem, Validation) {
  EXPECT_NO_THROW(fixtures::six_base_points());
  EXPECT_THROW(ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"X1^2", "X2", "X1*X2"}), ValidationError);
  EXPECT_THROW(ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"X1^2", "X2^2", "X1^2+X2^2"}), ValidationError);
  EXPECT_NO_THROW(ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"X1^2", "X2^2", "X1^2+X2^2"},
                                     Independence::allow_dependent));
  EXPECT_THROW(ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"X1^2", "X2^2"}), ValidationError);
  EXPECT_THROW(ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"X1^2+X2", "X2^2", "X1*X2"}), ValidationError);
}

TEST(ParamSystem, SubstitutionAndReduction) {
  auto sys = fixtures::six_base_points();
  auto h = parse_poly("T0*T1*T2 + T0*T1*T3 - T2*T3^2", {sys.t_names(), Field::rationals()});
  EXPECT_TRUE(evaluate_T(h, sys).is_zero());
  auto red = sys.reduced(101);
  EXPECT_EQ(red.field(), Field::prime(101));
  EXPECT_EQ(red.d(), 3);
  auto half = ParamSystem::parse(Field::rationals(), {"X1", "X2"}, {"1/7*X1^2", "X2^2", "X1*X2"});
  EXPECT_THROW(half.reduced(7), ValidationError);
}

}  // namespace
}  // namespace mrep

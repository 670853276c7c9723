#pragma once

#include <vector>

#include <gmpxx.h>

namespace mrep {

// Univariate integer polynomial, index = exponent.
using IntSeries = std::vector<mpz_class>;

IntSeries series_mul(const IntSeries& a, const IntSeries& b);
IntSeries series_pow(const IntSeries& a, unsigned e);
IntSeries one_minus_t_pow(unsigned d);  // 1 - t^d

// Coefficients of num/den through degree `upto`, trailing zeros dropped.
// Throws ValidationError if the constant term of den is not a unit or if the
// quotient is not a polynomial although `upto` covers its degree.
IntSeries poly_series_coeffs(const IntSeries& num, const IntSeries& den, int upto);

mpz_class binomial(long n, long k);  // 0 outside 0 <= k <= n

}  // namespace mrep

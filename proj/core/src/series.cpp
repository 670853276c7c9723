#include "mrep/series.hpp"

#include <algorithm>

#include "mrep/errors.hpp"

namespace mrep {

namespace {
void trim(IntSeries& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}
int degree_of(const IntSeries& s) {
  for (int i = static_cast<int>(s.size()) - 1; i >= 0; --i)
    if (s[i] != 0) return i;
  return -1;
}
}  // namespace

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  if (a.empty() || b.empty()) return {};
  IntSeries r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

IntSeries series_pow(const IntSeries& a, unsigned e) {
  IntSeries r{1};
  for (unsigned k = 0; k < e; ++k) r = series_mul(r, a);
  return r;
}

IntSeries one_minus_t_pow(unsigned d) {
  IntSeries r(d + 1, 0);
  r[0] = 1;
  r[d] -= 1;
  trim(r);
  return r;
}

IntSeries poly_series_coeffs(const IntSeries& num, const IntSeries& den, int upto) {
  if (den.empty() || (den[0] != 1 && den[0] != -1))
    throw ValidationError("series denominator must have constant term +-1");
  if (upto < 0) return {};
  IntSeries q(upto + 1, 0);
  for (int i = 0; i <= upto; ++i) {
    mpz_class acc = i < static_cast<int>(num.size()) ? num[i] : mpz_class(0);
    for (int j = 1; j <= i && j < static_cast<int>(den.size()); ++j) acc -= den[j] * q[i - j];
    q[i] = acc * den[0];  // den[0] is its own inverse
  }
  int dn = degree_of(num), dd = degree_of(den);
  if (dn >= 0 && upto >= dn - dd) {
    IntSeries r = series_mul(den, q);
    r.resize(std::max(r.size(), num.size()), 0);
    for (std::size_t i = 0; i < num.size(); ++i) r[i] -= num[i];
    trim(r);
    if (!r.empty()) throw ValidationError("quotient is not a polynomial: nonzero remainder");
  }
  trim(q);
  return q;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace mrep

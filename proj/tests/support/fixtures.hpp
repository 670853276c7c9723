#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mrep/param_system.hpp"

namespace mrep::fixtures {

inline ParamSystem six_base_points() {
  return ParamSystem::parse(Field::rationals(), {"X1", "X2", "X3"},
                            {"X1*X3^2", "X2^2*(X1+X3)", "X1*X2*(X1+X3)", "X2*X3*(X1+X3)"});
}

// n+1 forms of degree d with integer coefficients uniform in [lo, hi].
inline ParamSystem random_forms(std::size_t n, int d, std::uint64_t seed, long lo = -50, long hi = 50) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(lo, hi);
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Term> terms;
    for (const auto& m : monomial_basis(n, d)) terms.emplace_back(m, Scalar(coef(rng)));
    forms.push_back(MultiPoly::from_terms(n, Field::rationals(), std::move(terms)));
  }
  return ParamSystem(Field::rationals(), std::move(forms));
}

// Signed maximal minors of a random 4x3 matrix of linear forms in X1..X3.
inline ParamSystem hilbert_burch(std::uint64_t seed, long lo = -9, long hi = 9) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(lo, hi);
  const std::size_t n = 3;
  std::vector<std::vector<MultiPoly>> a(4, std::vector<MultiPoly>(3));
  for (auto& row : a)
    for (auto& e : row) {
      std::vector<Term> terms;
      for (std::size_t v = 0; v < n; ++v) terms.emplace_back(Monomial::variable(n, v), Scalar(coef(rng)));
      e = MultiPoly::from_terms(n, Field::rationals(), std::move(terms));
    }
  auto det3 = [](const std::vector<const std::vector<MultiPoly>*>& r) {
    const auto& x = *r[0];
    const auto& y = *r[1];
    const auto& z = *r[2];
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0]);
  };
  std::vector<MultiPoly> forms;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<const std::vector<MultiPoly>*> rows;
    for (std::size_t r = 0; r < 4; ++r)
      if (r != skip) rows.push_back(&a[r]);
    MultiPoly m = det3(rows);
    forms.push_back(skip % 2 ? -m : m);
  }
  return ParamSystem(Field::rationals(), std::move(forms));
}

}  // namespace mrep::fixtures

#pragma once

#include <tuple>
#include <vector>

#include "mrep/poly.hpp"

namespace mrep {

struct BiTerm {
  Monomial x;
  Monomial t;
  Scalar c;
};

// Element of S_{mu,l}: polynomial in X1..Xn and T0..Tn, homogeneous of X-degree mu
// and T-degree l.
class BigradedPoly {
 public:
  BigradedPoly() = default;
  BigradedPoly(std::size_t nx, std::size_t nt, int mu, int ell, Field field)
      : nx_(nx), nt_(nt), mu_(mu), ell_(ell), field_(field) {}
  // Throws std::invalid_argument when a term has the wrong bidegree.
  static BigradedPoly from_terms(std::size_t nx, std::size_t nt, int mu, int ell, Field field,
                                 std::vector<BiTerm> terms);

  std::size_t nx() const { return nx_; }
  std::size_t nt() const { return nt_; }
  int mu() const { return mu_; }
  int ell() const { return ell_; }
  const Field& field() const { return field_; }
  const std::vector<BiTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigradedPoly& operator+=(const BigradedPoly& o);
  BigradedPoly& operator-=(const BigradedPoly& o);
  friend BigradedPoly operator+(BigradedPoly a, const BigradedPoly& b) { return a += b; }
  friend BigradedPoly operator-(BigradedPoly a, const BigradedPoly& b) { return a -= b; }
  BigradedPoly scaled(const Scalar& c) const;
  BigradedPoly times(const Monomial& x, const Monomial& t) const;
  bool operator==(const BigradedPoly& o) const;

  // Coefficient of each X-monomial as a polynomial in the T variables.
  std::vector<std::pair<Monomial, MultiPoly>> by_x_monomial() const;

 private:
  void combine(const BigradedPoly& o, bool negate);
  std::size_t nx_ = 0, nt_ = 0;
  int mu_ = 0, ell_ = 0;
  Field field_;
  std::vector<BiTerm> terms_;  // sorted by (t, x), each decreasing grlex
};

// Monomial basis of S_{mu,l} with coordinate (t index) * dim R_mu + (x index).
class BidegreeBasis {
 public:
  BidegreeBasis(std::size_t nx, std::size_t nt, int mu, int ell);
  std::size_t size() const { return xs_.size() * ts_.size(); }
  std::size_t index(const Monomial& x, const Monomial& t) const { return ts_.at(t) * xs_.size() + xs_.at(x); }
  const Monomial& x_of(std::size_t k) const { return xs_[k % xs_.size()]; }
  const Monomial& t_of(std::size_t k) const { return ts_[k / xs_.size()]; }
  const MonomialIndex& xs() const { return xs_; }
  const MonomialIndex& ts() const { return ts_; }
  int mu() const { return mu_; }
  int ell() const { return ell_; }

  std::vector<Scalar> coords(const BigradedPoly& p) const;
  BigradedPoly element(const std::vector<Scalar>& v, const Field& field) const;

 private:
  std::size_t nx_, nt_;
  int mu_, ell_;
  MonomialIndex xs_, ts_;
};

}  // namespace mrep

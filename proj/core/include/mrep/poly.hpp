#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mrep/field.hpp"
#include "mrep/monomial.hpp"

namespace mrep {

using Term = std::pair<Monomial, Scalar>;

// Sparse polynomial; terms sorted by decreasing grlex, no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(std::size_t nvars, Field field) : n_(nvars), field_(field) {}
  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly monomial(const Monomial& m, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i, Field field);
  // Terms in any order, repeats allowed.
  static MultiPoly from_terms(std::size_t nvars, Field field, std::vector<Term> terms);

  std::size_t nvars() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  const Term& leading() const { return terms_.front(); }
  Scalar coeff(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly times_monomial(const Monomial& m, const Scalar& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(std::size_t var) const;
  // Replace variable i by subs[i]; all subs share an arity.
  MultiPoly compose(const std::vector<MultiPoly>& subs) const;
  MultiPoly in_field(const Field& f) const;  // reduce a rational polynomial into f

 private:
  void add_scaled(const MultiPoly& o, bool negate);
  std::size_t n_ = 0;
  Field field_;
  std::vector<Term> terms_;
};

}  // namespace mrep

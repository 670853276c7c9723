#pragma once

#include <string>
#include <vector>

#include "mrep/bigraded.hpp"
#include "mrep/parse.hpp"

namespace mrep {

// Linear independence of the forms is required by every invariant built on top of
// the Koszul complex; the degree-wise Koszul and syzygy computations alone also
// accept dependent forms.
enum class Independence { require, allow_dependent };

// n+1 forms of degree d in n variables, validated.
class ParamSystem {
 public:
  // Throws ValidationError on bad shape, inhomogeneous or (unless allowed) dependent forms.
  ParamSystem(Field field, std::vector<MultiPoly> forms, std::vector<std::string> names = {},
              Independence check = Independence::require);
  static ParamSystem parse(Field field, const std::vector<std::string>& names, const std::vector<std::string>& forms,
                           Independence check = Independence::require);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  int d() const { return d_; }
  std::size_t nforms() const { return forms_.size(); }
  const std::vector<MultiPoly>& forms() const { return forms_; }
  const MultiPoly& form(std::size_t i) const { return forms_[i]; }
  const std::vector<std::string>& x_names() const { return names_; }
  std::vector<std::string> t_names() const;

  // Image modulo p; throws ValidationError if p divides a denominator or the
  // reduced forms lose degree or independence.
  ParamSystem reduced(std::uint64_t p) const;

  // f^beta for a T-monomial beta.
  MultiPoly power_product(const Monomial& beta) const;

 private:
  Field field_;
  std::size_t n_ = 0;
  int d_ = 0;
  std::vector<MultiPoly> forms_;
  std::vector<std::string> names_;
};

// Replace each T_i by f_i.
MultiPoly substitute_T(const BigradedPoly& p, const ParamSystem& sys);
// Same for a polynomial in T0..Tn alone.
MultiPoly evaluate_T(const MultiPoly& h, const ParamSystem& sys);

}  // namespace mrep

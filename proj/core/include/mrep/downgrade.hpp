#pragma once

#include "mrep/syzygy.hpp"

namespace mrep {

// Replace the first T variable of every term by the matching form:
// bidegree (mu, l) -> (mu + d, l - 1).
BigradedPoly downgrade_once(const BigradedPoly& p, const ParamSystem& sys);
Vec downgrade_coords(const ParamSystem& sys, int mu, int ell, const Vec& v);

// Membership in the span of the Koszul generators' multiples in the bidegree of p.
bool in_koszul_slice(const ParamSystem& sys, const BigradedPoly& p);

// A class of S/KS, with equality decided against the Koszul slice.
struct KoszulClass {
  BigradedPoly rep;
  bool same_as(const BigradedPoly& other, const ParamSystem& sys) const;
};

struct LambdaVerdict {
  int mu = 0, p = 0;
  std::size_t source_dim = 0, target_dim = 0, rank = 0;
  bool injective = false, surjective = false, bijective = false;
  bool guaranteed = false;  // m-primary and mu >= mu0
};

// Matrix of lambda_p^mu from the new-column basis at (mu, p) into the target quotient
// at (mu + d, p - 1). With `strict`, a non-bijective map in the guaranteed range
// throws HypothesisViolation.
LambdaVerdict lambda_check(KoszulLab& lab, int mu, int p, bool strict = true);

// Q of bidegree (mu, 2) with Q(X, f) = 0 and downgrade_once(Q) = sigma mod KS.
// sigma must be a non-Koszul syzygy of coefficient degree mu + d.
BigradedPoly upgrade(KoszulLab& lab, int mu, const BigradedPoly& sigma);

}  // namespace mrep

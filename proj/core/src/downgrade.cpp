#include "mrep/downgrade.hpp"

#include "mrep/errors.hpp"

namespace mrep {

BigradedPoly downgrade_once(const BigradedPoly& p, const ParamSystem& sys) {
  if (p.ell() < 1) throw std::invalid_argument("downgrade needs T-degree >= 1");
  if (p.nt() != sys.nforms() || p.nx() != sys.n()) throw std::invalid_argument("downgrade: ambient mismatch");
  std::vector<BiTerm> out;
  for (const auto& term : p.terms()) {
    std::size_t i = 0;
    while (term.t[i] == 0) ++i;
    Monomial rest = term.t / Monomial::variable(sys.nforms(), i);
    for (const auto& [m, c] : sys.form(i).terms()) out.push_back(BiTerm{term.x * m, rest, term.c * c});
  }
  return BigradedPoly::from_terms(sys.n(), sys.nforms(), p.mu() + sys.d(), p.ell() - 1, sys.field(), std::move(out));
}

Vec downgrade_coords(const ParamSystem& sys, int mu, int ell, const Vec& v) {
  BidegreeBasis src = bidegree_basis(sys, mu, ell), dst = bidegree_basis(sys, mu + sys.d(), ell - 1);
  return dst.coords(downgrade_once(src.element(v, sys.field()), sys));
}

namespace {

bool in_span(const std::vector<Vec>& gens, const Vec& v, std::size_t dim, const Field& f) {
  EchelonSpan s(dim, f);
  for (const auto& g : gens) s.add(g);
  return s.contains(v);
}

}  // namespace

bool in_koszul_slice(const ParamSystem& sys, const BigradedPoly& p) {
  BidegreeBasis b = bidegree_basis(sys, p.mu(), p.ell());
  return in_span(koszul_span(sys, p.mu(), p.ell()), b.coords(p), b.size(), sys.field());
}

bool KoszulClass::same_as(const BigradedPoly& other, const ParamSystem& sys) const {
  return in_koszul_slice(sys, rep - other);
}

LambdaVerdict lambda_check(KoszulLab& lab, int mu, int p, bool strict) {
  if (p < 2) throw ValidationError("lambda_p needs p >= 2");
  const ParamSystem& sys = lab.system();
  const int d = sys.d();
  LambdaVerdict v;
  v.mu = mu;
  v.p = p;
  v.guaranteed = lab.mprimary() && mu >= lab.mu0();
  SliceQuotient src = new_columns(lab, mu, p, false);
  v.source_dim = src.count;
  v.target_dim = p == 2 ? lab.slice(1, mu + 2 * d).dim_H : new_column_count(lab.work(), mu + d, p - 1);
  if (v.source_dim > 0) {
    BidegreeBasis tb = bidegree_basis(sys, mu + d, p - 1);
    std::vector<Vec> w = p == 2 ? koszul_span(sys, mu + d, 1) : lower_order_slice(sys, mu + d, p - 1);
    EchelonSpan span(tb.size(), sys.field());
    for (const auto& g : w) span.add(g);
    std::size_t base = span.dimension();
    for (const auto& rep : src.coords) {
      Vec img = downgrade_coords(sys, mu, p, rep);
      if (!substitute_T(tb.element(img, sys.field()), sys).is_zero())
        throw std::logic_error("downgrade left the equation slice");
      span.add(img);
    }
    v.rank = span.dimension() - base;
  }
  v.injective = v.rank == v.source_dim;
  v.surjective = v.rank == v.target_dim;
  v.bijective = v.injective && v.surjective;
  if (strict && v.guaranteed && !v.bijective)
    throw HypothesisViolation("lambda_" + std::to_string(p) + " at mu = " + std::to_string(mu) + " has rank " +
                              std::to_string(v.rank) + " (source " + std::to_string(v.source_dim) + ", target " +
                              std::to_string(v.target_dim) + ")");
  return v;
}

BigradedPoly upgrade(KoszulLab& lab, int mu, const BigradedPoly& sigma) {
  const ParamSystem& sys = lab.system();
  const int d = sys.d();
  if (sigma.mu() != mu + d || sigma.ell() != 1) throw ValidationError("sigma must have bidegree (mu + d, 1)");
  if (!substitute_T(sigma, sys).is_zero()) throw ValidationError("sigma is not a syzygy");
  if (in_koszul_slice(sys, sigma)) throw ValidationError("sigma is a Koszul syzygy");
  BidegreeBasis tb = bidegree_basis(sys, mu + d, 1);
  SliceQuotient src = new_columns(lab, mu, 2, false);
  std::vector<Vec> ks = koszul_span(sys, mu + d, 1);
  ExactMatrix a(tb.size(), src.coords.size() + ks.size(), sys.field());
  for (std::size_t j = 0; j < src.coords.size(); ++j) {
    Vec img = downgrade_coords(sys, mu, 2, src.coords[j]);
    for (std::size_t i = 0; i < img.size(); ++i) a.at(i, j) = img[i];
  }
  for (std::size_t j = 0; j < ks.size(); ++j)
    for (std::size_t i = 0; i < ks[j].size(); ++i) a.at(i, src.coords.size() + j) = ks[j][i];
  auto y = solve(a, tb.coords(sigma));
  if (!y) throw HypothesisViolation("no quadratic equation downgrades to the given syzygy at mu = " + std::to_string(mu));
  BidegreeBasis sb = bidegree_basis(sys, mu, 2);
  Vec q(sb.size(), sys.field().zero());
  for (std::size_t j = 0; j < src.coords.size(); ++j)
    for (std::size_t k = 0; k < q.size(); ++k)
      if (!src.coords[j][k].is_zero()) q[k] += (*y)[j] * src.coords[j][k];
  return sb.element(q, sys.field());
}

}  // namespace mrep

#include "mrep/param_system.hpp"

#include "mrep/errors.hpp"
#include "mrep/linalg.hpp"

namespace mrep {

ParamSystem::ParamSystem(Field field, std::vector<MultiPoly> forms, std::vector<std::string> names, Independence check)
    : field_(field), forms_(std::move(forms)), names_(std::move(names)) {
  if (forms_.size() < 3) throw ValidationError("need n+1 >= 3 forms");
  n_ = forms_.size() - 1;
  if (n_ > kMaxVars - 1) throw ValidationError("too many forms");
  if (names_.empty()) names_ = x_ambient(n_, field_).names;
  if (names_.size() != n_)
    throw ValidationError("expected " + std::to_string(n_) + " variables for " + std::to_string(n_ + 1) +
                          " forms, got " + std::to_string(names_.size()));
  d_ = -1;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const MultiPoly& f = forms_[i];
    if (f.is_zero()) throw ValidationError("form " + std::to_string(i) + " is zero");
    if (f.nvars() != n_) throw ValidationError("form " + std::to_string(i) + " has the wrong number of variables");
    if (!(f.field() == field_)) throw ValidationError("form " + std::to_string(i) + " is over another field");
    if (!f.is_homogeneous()) throw ValidationError("form " + std::to_string(i) + " is not homogeneous");
    if (d_ < 0) d_ = f.degree();
    if (f.degree() != d_)
      throw ValidationError("form " + std::to_string(i) + " has degree " + std::to_string(f.degree()) +
                            ", expected " + std::to_string(d_));
  }
  if (d_ < 1) throw ValidationError("forms must have degree >= 1");
  if (check == Independence::allow_dependent) return;
  MonomialIndex idx(monomial_basis(n_, d_));
  std::vector<Vec> cols;
  for (const auto& f : forms_) {
    Vec v(idx.size(), field_.zero());
    for (const auto& [m, c] : f.terms()) v[idx.at(m)] = c;
    cols.push_back(std::move(v));
  }
  if (rank(ExactMatrix::from_columns(cols, idx.size(), field_)) != forms_.size())
    throw ValidationError("forms are linearly dependent");
}

ParamSystem ParamSystem::parse(Field field, const std::vector<std::string>& names,
                               const std::vector<std::string>& forms, Independence check) {
  Ambient amb{names, field};
  std::vector<MultiPoly> polys;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    try {
      polys.push_back(parse_poly(forms[i], amb));
    } catch (const ParseError& e) {
      throw ValidationError("form " + std::to_string(i) + ": " + e.what());
    }
  }
  return ParamSystem(field, std::move(polys), names, check);
}

std::vector<std::string> ParamSystem::t_names() const { return t_ambient(n_ + 1, field_).names; }

ParamSystem ParamSystem::reduced(std::uint64_t p) const {
  Field fp = Field::prime(p);
  std::vector<MultiPoly> red;
  for (const auto& f : forms_) red.push_back(f.in_field(fp));
  try {
    return ParamSystem(fp, std::move(red), names_);
  } catch (const ValidationError& e) {
    throw ValidationError("reduction modulo " + std::to_string(p) + " is degenerate: " + e.what());
  }
}

MultiPoly ParamSystem::power_product(const Monomial& beta) const {
  MultiPoly r = MultiPoly::constant(n_, field_.one());
  for (std::size_t i = 0; i < beta.nvars(); ++i)
    if (beta[i]) r = r * forms_[i].pow(beta[i]);
  return r;
}

MultiPoly substitute_T(const BigradedPoly& p, const ParamSystem& sys) {
  if (p.nt() != sys.nforms() || p.nx() != sys.n()) throw std::invalid_argument("substitute_T: ambient mismatch");
  MultiPoly acc(sys.n(), sys.field());
  for (const auto& [x, tpoly] : p.by_x_monomial()) {
    MultiPoly e = evaluate_T(tpoly, sys);
    acc += e.times_monomial(x, sys.field().one());
  }
  return acc;
}

MultiPoly evaluate_T(const MultiPoly& h, const ParamSystem& sys) {
  if (h.nvars() != sys.nforms()) throw std::invalid_argument("evaluate_T: ambient mismatch");
  return h.compose(sys.forms());
}

}  // namespace mrep

#include "mrep/bigraded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mrep {

namespace {
bool term_before(const BiTerm& a, const BiTerm& b) {
  if (a.t != b.t) return grlex_less(b.t, a.t);
  return grlex_less(b.x, a.x);
}
}  // namespace

BigradedPoly BigradedPoly::from_terms(std::size_t nx, std::size_t nt, int mu, int ell, Field field,
                                      std::vector<BiTerm> terms) {
  BigradedPoly p(nx, nt, mu, ell, field);
  for (const auto& t : terms)
    if (static_cast<int>(t.x.degree()) != mu || static_cast<int>(t.t.degree()) != ell)
      throw std::invalid_argument("term does not have the declared bidegree");
  std::sort(terms.begin(), terms.end(), term_before);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().x == t.x && p.terms_.back().t == t.t) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c.is_zero()) p.terms_.pop_back();
  return p;
}

void BigradedPoly::combine(const BigradedPoly& o, bool negate) {
  if (o.mu_ != mu_ || o.ell_ != ell_ || o.nx_ != nx_ || o.nt_ != nt_)
    throw std::invalid_argument("bidegree mismatch");
  std::vector<BiTerm> all = terms_;
  for (const auto& t : o.terms_) all.push_back({t.x, t.t, negate ? -t.c : t.c});
  *this = from_terms(nx_, nt_, mu_, ell_, field_, std::move(all));
}

BigradedPoly& BigradedPoly::operator+=(const BigradedPoly& o) {
  combine(o, false);
  return *this;
}

BigradedPoly& BigradedPoly::operator-=(const BigradedPoly& o) {
  combine(o, true);
  return *this;
}

BigradedPoly BigradedPoly::scaled(const Scalar& c) const {
  BigradedPoly r(nx_, nt_, mu_, ell_, field_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

BigradedPoly BigradedPoly::times(const Monomial& x, const Monomial& t) const {
  std::vector<BiTerm> out;
  out.reserve(terms_.size());
  for (const auto& s : terms_) out.push_back({s.x * x, s.t * t, s.c});
  return from_terms(nx_, nt_, mu_ + static_cast<int>(x.degree()), ell_ + static_cast<int>(t.degree()), field_,
                    std::move(out));
}

bool BigradedPoly::operator==(const BigradedPoly& o) const {
  if (mu_ != o.mu_ || ell_ != o.ell_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].x != o.terms_[i].x || terms_[i].t != o.terms_[i].t || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::vector<std::pair<Monomial, MultiPoly>> BigradedPoly::by_x_monomial() const {
  std::map<Monomial, std::vector<Term>, GrlexGreater> groups;
  for (const auto& t : terms_) groups[t.x].emplace_back(t.t, t.c);
  std::vector<std::pair<Monomial, MultiPoly>> out;
  for (auto& [x, ts] : groups) out.emplace_back(x, MultiPoly::from_terms(nt_, field_, std::move(ts)));
  return out;
}

BidegreeBasis::BidegreeBasis(std::size_t nx, std::size_t nt, int mu, int ell)
    : nx_(nx), nt_(nt), mu_(mu), ell_(ell), xs_(monomial_basis(nx, mu)), ts_(monomial_basis(nt, ell)) {}

std::vector<Scalar> BidegreeBasis::coords(const BigradedPoly& p) const {
  if (p.mu() != mu_ || p.ell() != ell_) throw std::invalid_argument("coords: bidegree mismatch");
  std::vector<Scalar> v(size(), p.field().zero());
  for (const auto& t : p.terms()) v[index(t.x, t.t)] = t.c;
  return v;
}

BigradedPoly BidegreeBasis::element(const std::vector<Scalar>& v, const Field& field) const {
  std::vector<BiTerm> terms;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) terms.push_back({x_of(k), t_of(k), v[k]});
  return BigradedPoly::from_terms(nx_, nt_, mu_, ell_, field, std::move(terms));
}

}  // namespace mrep

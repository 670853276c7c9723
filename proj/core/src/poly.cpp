#include "mrep/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrep {

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars, c.field());
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Scalar& c) {
  MultiPoly p(m.nvars(), c.field());
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i, Field field) {
  return monomial(Monomial::variable(nvars, i), field.one());
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, Field field, std::vector<Term> terms) {
  MultiPoly p(nvars, field);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree());
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.degree() != terms_.front().first.degree()) return false;
  return true;
}

Scalar MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grlex_less(x, t.first); });
  if (it != terms_.end() && it->first == m) return it->second;
  return field_.zero();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void MultiPoly::add_scaled(const MultiPoly& o, bool negate) {
  if (o.terms_.empty()) return;
  if (terms_.empty() && n_ == 0) {
    n_ = o.n_;
    field_ = o.field_;
  }
  if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_less(o.terms_[j].first, terms_[i].first))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_less(terms_[i].first, o.terms_[j].first)) {
      out.emplace_back(o.terms_[j].first, negate ? -o.terms_[j].second : o.terms_[j].second);
      ++j;
    } else {
      Scalar c = negate ? terms_[i].second - o.terms_[j].second : terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    std::size_t n = a.n_ ? a.n_ : b.n_;
    return MultiPoly(n, a.n_ ? a.field_ : b.field_);
  }
  if (a.n_ != b.n_) throw std::invalid_argument("polynomial arity mismatch");
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.emplace_back(s.first * t.first, s.second * t.second);
  return MultiPoly::from_terms(a.n_, a.field_, std::move(prod));
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return MultiPoly(n_, field_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return MultiPoly(n_, field_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    t.first = t.first * m;
    t.second *= c;
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(n_, field_.one());
  MultiPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
  return true;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.first[var];
    if (e == 0) continue;
    Monomial m = t.first;
    m.set(var, e - 1);
    out.emplace_back(m, t.second * field_.from_int(e));
  }
  return from_terms(n_, field_, std::move(out));
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& subs) const {
  if (subs.size() != n_) throw std::invalid_argument("compose: wrong number of substitutions");
  std::size_t m = subs.empty() ? 0 : subs.front().nvars();
  // cache powers of each substitution
  std::vector<std::vector<MultiPoly>> powers(n_);
  MultiPoly result(m, field_);
  for (const auto& t : terms_) {
    MultiPoly acc = constant(m, t.second);
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned e = t.first[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, field_.one()));
      while (pw.size() <= e) pw.push_back(pw.back() * subs[i]);
      acc = acc * pw[e];
    }
    result += acc;
  }
  return result;
}

MultiPoly MultiPoly::in_field(const Field& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(t.first, f.image(t.second));
  return from_terms(n_, f, std::move(out));
}

}  // namespace mrep

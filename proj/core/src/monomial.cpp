#include "mrep/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrep {

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::from_vector(const std::vector<unsigned>& exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.set(i, 1);
  return m;
}

void Monomial::set(std::size_t i, unsigned v) {
  if (v > 0xffff) throw std::overflow_error("exponent too large");
  deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + v);
  e_[i] = static_cast<std::uint16_t>(v);
}

std::vector<unsigned> Monomial::to_vector() const { return std::vector<unsigned>(e_.begin(), e_.begin() + n_); }

Monomial Monomial::operator*(const Monomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + o.e_[i]);
  r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial does not divide");
    r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  }
  r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {
void enumerate(std::size_t n, std::size_t i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i + 1 == n) {
    cur.set(i, static_cast<unsigned>(left));
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.set(i, static_cast<unsigned>(e));
    enumerate(n, i + 1, left - e, cur, out);
  }
  cur.set(i, 0);
}
}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, int mu) {
  if (n == 0) throw std::invalid_argument("monomial_basis needs n >= 1");
  std::vector<Monomial> out;
  if (mu < 0) return out;
  out.reserve(monomial_count(n, mu));
  Monomial cur(n);
  enumerate(n, 0, mu, cur, out);
  return out;
}

std::size_t monomial_count(std::size_t n, int mu) {
  if (mu < 0) return 0;
  // C(mu + n - 1, n - 1)
  std::size_t r = 1;
  for (std::size_t k = 1; k < n; ++k) r = r * (static_cast<std::size_t>(mu) + k) / k;
  return r;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  pos_.reserve(basis_.size() * 2);
  for (std::size_t i = 0; i < basis_.size(); ++i) pos_.emplace(basis_[i], i);
}

std::size_t MonomialIndex::at(const Monomial& m) const {
  auto it = pos_.find(m);
  if (it == pos_.end()) throw std::out_of_range("monomial not in basis");
  return it->second;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names.at(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace mrep

#include "mrep/implicitize.hpp"

#include <algorithm>
#include <random>

#include "mrep/errors.hpp"
#include "mrep/modular.hpp"

namespace mrep {

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  MultiPoly q(a.nvars(), a.field()), r = a;
  const auto& [lb, cb] = b.leading();
  Scalar inv = cb.inverse();
  std::vector<Term> qterms;
  while (!r.is_zero()) {
    const auto& [lr, cr] = r.leading();
    if (!lb.divides(lr)) return std::nullopt;
    Monomial m = lr / lb;
    Scalar c = cr * inv;
    r -= b.times_monomial(m, c);
    qterms.emplace_back(m, c);
  }
  return MultiPoly::from_terms(a.nvars(), a.field(), std::move(qterms));
}

namespace {
MultiPoly must_divide(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return *q;
}
}  // namespace

MultiPoly normalize_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  if (!p.field().is_rational()) return p.scaled(p.leading().second.inverse());
  mpz_class l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) l = lcm(l, mpz_class(c.rational().get_den()));
  for (const auto& [m, c] : p.terms()) g = gcd(g, mpz_class(c.rational().get_num() * (l / c.rational().get_den())));
  mpq_class s(l, g);
  s.canonicalize();
  if (p.leading().second.sign() < 0) s = -s;
  return p.scaled(Scalar(s));
}

bool associates(const MultiPoly& a, const MultiPoly& b) { return normalize_primitive(a) == normalize_primitive(b); }

namespace {

using UPoly = std::vector<MultiPoly>;  // coefficients in the main variable, low to high

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly to_univariate(const MultiPoly& p, std::size_t v) {
  UPoly u;
  std::vector<std::vector<Term>> buckets;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m[v];
    if (buckets.size() <= e) buckets.resize(e + 1);
    Monomial r = m;
    r.set(v, 0);
    buckets[e].emplace_back(r, c);
  }
  for (auto& b : buckets) u.push_back(MultiPoly::from_terms(p.nvars(), p.field(), std::move(b)));
  trim(u);
  return u;
}

MultiPoly from_univariate(const UPoly& u, std::size_t v, std::size_t n, const Field& f) {
  MultiPoly r(n, f);
  for (std::size_t k = 0; k < u.size(); ++k) {
    Monomial m(n);
    m.set(v, static_cast<unsigned>(k));
    r += u[k].times_monomial(m, f.one());
  }
  return r;
}

UPoly prem(const UPoly& a, const UPoly& b) {
  const int db = udeg(b);
  const MultiPoly& lb = b.back();
  int e = udeg(a) - db + 1;
  UPoly r = a;
  while (!r.empty() && udeg(r) >= db) {
    MultiPoly lr = r.back();
    int shift = udeg(r) - db;
    for (auto& c : r) c = c * lb;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(k + shift)] -= lr * b[static_cast<std::size_t>(k)];
    trim(r);
    --e;
  }
  if (e > 0) {
    MultiPoly s = lb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c = c * s;
  }
  return r;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

int main_variable(const MultiPoly& a, const MultiPoly& b) {
  int v = -1;
  for (const MultiPoly* p : {&a, &b})
    for (const auto& [m, c] : p->terms())
      for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] && static_cast<int>(i) > v) v = static_cast<int>(i);
  return v;
}

MultiPoly content(const UPoly& u) {
  // smallest coefficients first keeps intermediate gcds small
  std::vector<const MultiPoly*> cs;
  for (const auto& c : u)
    if (!c.is_zero()) cs.push_back(&c);
  std::sort(cs.begin(), cs.end(), [](const MultiPoly* x, const MultiPoly* y) { return x->size() < y->size(); });
  MultiPoly g = *cs.front();
  for (std::size_t i = 1; i < cs.size() && g.degree() > 0; ++i) g = gcd_rec(g, *cs[i]);
  if (g.degree() == 0) return MultiPoly::constant(g.nvars(), g.field().one());
  return normalize_primitive(g);
}

UPoly divide_coeffs(const UPoly& u, const MultiPoly& c) {
  UPoly r;
  for (const auto& x : u) r.push_back(x.is_zero() ? x : must_divide(x, c));
  return r;
}

// Last nonzero subresultant of two polynomials of positive degree.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  const MultiPoly one = MultiPoly::constant(a.back().nvars(), a.back().field().one());
  MultiPoly g = one, h = one;
  for (;;) {
    int delta = udeg(a) - udeg(b);
    UPoly r = prem(a, b);
    if (r.empty()) return b;
    if (udeg(r) == 0) return UPoly{one};
    MultiPoly div = g * h.pow(static_cast<unsigned>(delta));
    a = std::move(b);
    b = divide_coeffs(r, div);
    g = a.back();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = must_divide(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const MultiPoly one = MultiPoly::constant(a.nvars(), a.field().one());
  if (a.degree() == 0 || b.degree() == 0) return one;
  int vi = main_variable(a, b);
  auto v = static_cast<std::size_t>(vi);
  UPoly ua = to_univariate(a, v), ub = to_univariate(b, v);
  if (udeg(ua) == 0) return normalize_primitive(gcd_rec(a, content(ub)));
  if (udeg(ub) == 0) return normalize_primitive(gcd_rec(content(ua), b));
  MultiPoly ca = content(ua), cb = content(ub);
  MultiPoly c = gcd_rec(ca, cb);
  if (c.degree() <= 0) c = one;
  UPoly pa = ca.degree() > 0 ? divide_coeffs(ua, ca) : ua;
  UPoly pb = cb.degree() > 0 ? divide_coeffs(ub, cb) : ub;
  UPoly g = subresultant_gcd(pa, pb);
  if (udeg(g) <= 0) return normalize_primitive(c);
  MultiPoly cg = content(g);
  if (cg.degree() > 0) g = divide_coeffs(g, cg);
  return normalize_primitive(c * from_univariate(g, v, a.nvars(), a.field()));
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars() && !a.is_zero() && !b.is_zero()) throw std::invalid_argument("gcd: arity mismatch");
  return normalize_primitive(gcd_rec(a, b));
}

MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const std::size_t nv = m[0][0].nvars();
  const Field f = m[0][0].field();
  MultiPoly prev = MultiPoly::constant(nv, f.one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // sparsest nonzero pivot
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m[i][k].is_zero() && (piv == n || m[i][k].size() < m[piv][k].size())) piv = i;
    if (piv == n) return MultiPoly(nv, f);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t -= m[i][k] * m[k][j];
        m[i][j] = k == 0 ? t : must_divide(t, prev);
      }
      m[i][k] = MultiPoly(nv, f);
    }
    prev = m[k][k];
  }
  MultiPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

std::vector<std::vector<MultiPoly>> submatrix(const MatrixRep& m, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<MultiPoly>> a(m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (auto j : cols) a[i].push_back(m.columns[j].entries[i]);
  return a;
}

}  // namespace

MultiPoly det_square(const MatrixRep& m) {
  if (m.nrows() != m.ncols()) throw ValidationError("det_square needs a square matrix");
  if (m.nrows() == 0) throw ValidationError("empty matrix");
  std::vector<std::size_t> all(m.ncols());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  MultiPoly d = det_bareiss(submatrix(m, all));
  if (d.is_zero()) throw HypothesisViolation("the matrix is singular: determinant is zero");
  return normalize_primitive(d);
}

// ---------------------------------------------------------------------------
// modular evaluation on lines

namespace {

using U64 = std::uint64_t;
using ModPoly = std::vector<U64>;  // low to high

U64 addm(U64 a, U64 b, U64 p) {
  U64 s = a + b;
  return s >= p ? s - p : s;
}
U64 subm(U64 a, U64 b, U64 p) { return a >= b ? a - b : a + p - b; }

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, U64 p) {
  U64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    U64 c = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = subm(a[k + shift], mulmod(c, b[k], p), p);
    a.pop_back();
    mtrim(a);
  }
  return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, U64 p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  U64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

U64 mod_eval(const ModPoly& a, U64 x, U64 p) {
  U64 r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = addm(mulmod(r, x, p), a[k], p);
  return r;
}

// Interpolation through (k, y_k), k = 0..m-1.
ModPoly mod_interpolate(const std::vector<U64>& y, U64 p) {
  const std::size_t m = y.size();
  std::vector<U64> c = y;  // divided differences
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      c[i] = mulmod(subm(c[i], c[i - 1], p), invmod(j % p, p), p);
      if (i == j) break;
    }
  ModPoly r(1, c[m - 1]);
  for (std::size_t k = m - 1; k-- > 0;) {
    // r = r * (x - k) + c[k]
    ModPoly t(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      t[i + 1] = addm(t[i + 1], r[i], p);
      t[i] = subm(t[i], mulmod(r[i], k % p, p), p);
    }
    t[0] = addm(t[0], c[k], p);
    r = std::move(t);
  }
  mtrim(r);
  return r;
}

U64 mod_det(std::vector<U64> a, std::size_t n, U64 p) {
  U64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = p - det;
      if (det == p) det = 0;
    }
    det = mulmod(det, a[c * n + c], p);
    U64 inv = invmod(a[c * n + c], p);
    for (std::size_t i = c + 1; i < n; ++i) {
      U64 f = mulmod(a[i * n + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = subm(a[i * n + j], mulmod(f, a[c * n + j], p), p);
    }
  }
  return det;
}

U64 residue_of(const Scalar& s, U64 p) {
  if (!s.field().is_rational()) return s.residue() % p;
  const mpq_class& q = s.rational();
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p));
  if (num < 0) num += static_cast<unsigned long>(p);
  U64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) throw std::domain_error("prime divides a denominator");
  return mulmod(num.get_ui(), invmod(den, p), p);
}

struct ModTerm {
  std::vector<unsigned> e;
  U64 c;
};
using ModForm = std::vector<ModTerm>;

ModForm reduce_form(const MultiPoly& f, U64 p) {
  ModForm out;
  for (const auto& [m, c] : f.terms()) {
    U64 r = residue_of(c, p);
    if (r) out.push_back(ModTerm{m.to_vector(), r});
  }
  return out;
}

U64 eval_form(const ModForm& f, const std::vector<std::vector<U64>>& pw, U64 p) {
  U64 acc = 0;
  for (const auto& t : f) {
    U64 v = t.c;
    for (std::size_t i = 0; i < t.e.size(); ++i)
      if (t.e[i]) v = mulmod(v, pw[i][t.e[i]], p);
    acc = addm(acc, v, p);
  }
  return acc;
}

// Something whose restriction to the line s*u + v can be computed modulo p.
class LineSource {
 public:
  virtual ~LineSource() = default;
  virtual std::size_t count() const = 0;
  virtual int max_degree() const = 0;
  virtual std::size_t nvars() const = 0;
  virtual void prepare(U64 p) = 0;
  // values[k][i] = value of input k at point i
  virtual std::vector<std::vector<U64>> values(const std::vector<std::vector<U64>>& points, U64 p) const = 0;
};

std::vector<std::vector<U64>> powers_at(const std::vector<U64>& w, int deg, U64 p) {
  std::vector<std::vector<U64>> pw(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    pw[i].assign(static_cast<std::size_t>(deg) + 1, 1);
    for (int k = 1; k <= deg; ++k) pw[i][static_cast<std::size_t>(k)] = mulmod(pw[i][static_cast<std::size_t>(k) - 1], w[i], p);
  }
  return pw;
}

class PolySource : public LineSource {
 public:
  explicit PolySource(const std::vector<MultiPoly>& ps) : ps_(ps) {
    for (const auto& q : ps_) deg_ = std::max(deg_, q.degree());
  }
  std::size_t count() const override { return ps_.size(); }
  int max_degree() const override { return deg_; }
  std::size_t nvars() const override { return ps_.front().nvars(); }
  void prepare(U64 p) override {
    red_.clear();
    for (const auto& q : ps_) red_.push_back(reduce_form(q, p));
  }
  std::vector<std::vector<U64>> values(const std::vector<std::vector<U64>>& points, U64 p) const override {
    std::vector<std::vector<U64>> out(red_.size(), std::vector<U64>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto pw = powers_at(points[i], deg_, p);
      for (std::size_t k = 0; k < red_.size(); ++k) out[k][i] = eval_form(red_[k], pw, p);
    }
    return out;
  }

 private:
  std::vector<MultiPoly> ps_;
  std::vector<ModForm> red_;
  int deg_ = 0;
};

class MinorSource : public LineSource {
 public:
  MinorSource(const MatrixRep& m, std::vector<std::vector<std::size_t>> subsets) : m_(m), subsets_(std::move(subsets)) {
    for (const auto& c : m_.columns) maxentry_ = std::max(maxentry_, c.tdegree);
    for (const auto& s : subsets_) {
      int d = 0;
      for (auto j : s) d += m_.columns[j].tdegree;
      deg_ = std::max(deg_, d);
    }
  }
  std::size_t count() const override { return subsets_.size(); }
  int max_degree() const override { return deg_; }
  std::size_t nvars() const override { return m_.t_names.size(); }
  void set_subsets(std::vector<std::vector<std::size_t>> s) {
    subsets_ = std::move(s);
    deg_ = 0;
    for (const auto& t : subsets_) {
      int d = 0;
      for (auto j : t) d += m_.columns[j].tdegree;
      deg_ = std::max(deg_, d);
    }
  }
  void prepare(U64 p) override {
    red_.assign(m_.nrows(), std::vector<ModForm>(m_.ncols()));
    for (std::size_t i = 0; i < m_.nrows(); ++i)
      for (std::size_t j = 0; j < m_.ncols(); ++j) red_[i][j] = reduce_form(m_.columns[j].entries[i], p);
  }
  std::vector<std::vector<U64>> values(const std::vector<std::vector<U64>>& points, U64 p) const override {
    const std::size_t r = m_.nrows();
    std::vector<std::vector<U64>> out(subsets_.size(), std::vector<U64>(points.size()));
    std::vector<U64> full(r * m_.ncols());
    for (std::size_t pt = 0; pt < points.size(); ++pt) {
      auto pw = powers_at(points[pt], maxentry_, p);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m_.ncols(); ++j) full[i * m_.ncols() + j] = eval_form(red_[i][j], pw, p);
      for (std::size_t k = 0; k < subsets_.size(); ++k) {
        std::vector<U64> a(r * r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t c = 0; c < r; ++c) a[i * r + c] = full[i * m_.ncols() + subsets_[k][c]];
        out[k][pt] = mod_det(std::move(a), r, p);
      }
    }
    return out;
  }

 private:
  const MatrixRep& m_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::vector<std::vector<ModForm>> red_;
  int deg_ = 0, maxentry_ = 1;
};

U64 prime_at(std::size_t k) {
  static std::vector<U64> cache{kMersenne61};
  while (cache.size() <= k) {
    U64 q = cache.back() - 2;
    while (!is_prime_u64(q)) q -= 2;
    cache.push_back(q);
  }
  return cache[k];
}

struct LineData {
  std::vector<ModPoly> restr;  // restriction of each input
  ModPoly g;                   // their monic gcd
};

LineData on_line(const LineSource& src, const std::vector<U64>& u, const std::vector<U64>& v, U64 p) {
  const int deg = src.max_degree();
  std::vector<std::vector<U64>> pts;
  for (int s = 0; s <= deg; ++s) {
    std::vector<U64> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = addm(mulmod(static_cast<U64>(s), u[i], p), v[i], p);
    pts.push_back(std::move(w));
  }
  auto vals = src.values(pts, p);
  LineData d;
  for (const auto& y : vals) d.restr.push_back(mod_interpolate(y, p));
  for (const auto& r : d.restr) d.g = d.g.empty() ? mod_gcd(r, {}, p) : mod_gcd(d.g, r, p);
  return d;
}

std::vector<U64> random_point(std::size_t n, U64 p, std::mt19937_64& rng) {
  std::vector<U64> w(n);
  for (auto& x : w) x = rng() % p;
  return w;
}

bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out) {
  mpz_class bound = sqrt(m / 2);
  mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (abs(s1) > bound || s1 == 0) return false;
  if (gcd(r1, s1) != 1) return false;
  out = mpq_class(r1, s1);
  out.canonicalize();
  return true;
}

// Coefficients of the gcd modulo p over the degree-D monomials, scaled so the first
// nonzero one is 1, or empty on failure. Each line s*u + v gets its own direction; the
// monic gcd on it equals G(s*u + v) / G(u), so G(u) enters as one more unknown per line.
std::vector<U64> interpolate_gcd(const LineSource& src, int D, const std::vector<Monomial>& mons, U64 p,
                                 std::mt19937_64& rng) {
  const std::size_t n = src.nvars(), K = mons.size();
  const std::size_t per = static_cast<std::size_t>(D) + 1;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::size_t lines = (K + static_cast<std::size_t>(D) - 1) / static_cast<std::size_t>(D) + 2 + static_cast<std::size_t>(attempt) * 2;
    std::vector<std::vector<U64>> rows;
    std::size_t used = 0;
    for (std::size_t tries = 0; used < lines && tries < 4 * lines + 8; ++tries) {
      std::vector<U64> u = random_point(n, p, rng), v = random_point(n, p, rng);
      LineData d = on_line(src, u, v, p);
      if (static_cast<int>(d.g.size()) - 1 != D) continue;
      for (std::size_t s = 0; s < per; ++s) {
        std::vector<U64> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = addm(mulmod(s, u[i], p), v[i], p);
        auto pw = powers_at(w, D, p);
        std::vector<U64> row(K + lines, 0);
        for (std::size_t k = 0; k < K; ++k) {
          U64 x = 1;
          for (std::size_t i = 0; i < n; ++i)
            if (mons[k][i]) x = mulmod(x, pw[i][mons[k][i]], p);
          row[k] = x;
        }
        U64 gv = mod_eval(d.g, s, p);
        row[K + used] = gv ? p - gv : 0;
        rows.push_back(std::move(row));
      }
      ++used;
    }
    if (used < lines) continue;
    ModMatrix a{rows.size(), K + lines, p, {}};
    for (const auto& r : rows) a.a.insert(a.a.end(), r.begin(), r.end());
    auto piv = mod_echelon(a, true);
    if (piv.size() + 1 != K + lines) continue;  // kernel must be one-dimensional
    std::vector<bool> is_piv(K + lines, false);
    for (auto c : piv) is_piv[c] = true;
    std::size_t f = 0;
    while (is_piv[f]) ++f;
    std::vector<U64> c(K, 0);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (piv[r] < K) c[piv[r]] = a.at(r, f) ? p - a.at(r, f) : 0;
    if (f < K) c[f] = 1;
    std::size_t lead = 0;
    while (lead < K && c[lead] == 0) ++lead;
    if (lead == K) continue;
    U64 inv = invmod(c[lead], p);
    for (auto& x : c) x = mulmod(x, inv, p);
    return c;
  }
  return {};
}

MultiPoly modular_gcd_source(LineSource& src, std::size_t* primes_used) {
  const std::size_t n = src.nvars();
  // degree of the gcd from a line modulo the first prime
  std::mt19937_64 rng(0x6d726570ULL);
  U64 p0 = prime_at(0);
  src.prepare(p0);
  int D = -1;
  for (int i = 0; i < 3; ++i) {
    LineData d = on_line(src, random_point(n, p0, rng), random_point(n, p0, rng), p0);
    int dg = static_cast<int>(d.g.size()) - 1;
    if (D < 0 || dg < D) D = dg;
  }
  if (D < 0) throw HypothesisViolation("all inputs vanish");
  Field q = Field::rationals();
  if (D == 0) return MultiPoly::constant(n, q.one());
  auto mons = monomial_basis(n, D);
  const std::size_t K = mons.size();
  std::vector<mpz_class> acc(K);
  mpz_class modulus = 1;
  std::vector<mpq_class> last;
  bool have_last = false;
  std::size_t used = 0;
  for (std::size_t k = 0; k < 60; ++k) {
    U64 p = prime_at(k);
    try {
      src.prepare(p);
    } catch (const std::domain_error&) {
      continue;
    }
    std::vector<U64> c = interpolate_gcd(src, D, mons, p, rng);
    if (c.empty()) continue;
    ++used;
    if (modulus == 1) {
      for (std::size_t i = 0; i < K; ++i) acc[i] = static_cast<unsigned long>(c[i]);
    } else {
      // CRT: x = acc + modulus * t, t = (c - acc) / modulus mod p
      U64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      for (std::size_t i = 0; i < K; ++i) {
        U64 ai = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
        U64 t = mulmod(subm(c[i], ai, p), minv, p);
        acc[i] += modulus * mpz_class(static_cast<unsigned long>(t));
      }
    }
    modulus *= mpz_class(static_cast<unsigned long>(p));
    std::vector<mpq_class> rec(K);
    bool ok = true;
    for (std::size_t i = 0; i < K && ok; ++i) ok = rational_reconstruct(acc[i], modulus, rec[i]);
    if (ok && have_last && rec == last) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < K; ++i)
        if (rec[i] != 0) terms.emplace_back(mons[i], Scalar(rec[i]));
      if (primes_used) *primes_used = used;
      return normalize_primitive(MultiPoly::from_terms(n, q, std::move(terms)));
    }
    have_last = ok;
    if (ok) last = std::move(rec);
  }
  throw std::runtime_error("modular gcd did not stabilize");
}

// Check on a fresh line modulo an unused prime that g divides every input.
bool divides_on_line(LineSource& src, const MultiPoly& g) {
  U64 p = prime_at(97);
  src.prepare(p);
  std::mt19937_64 rng(0x636865636bULL);
  PolySource gs({g});
  gs.prepare(p);
  for (int t = 0; t < 2; ++t) {
    auto u = random_point(src.nvars(), p, rng), v = random_point(src.nvars(), p, rng);
    LineData d = on_line(src, u, v, p);
    LineData e = on_line(gs, u, v, p);
    ModPoly gl = e.restr.front();
    for (const auto& r : d.restr)
      if (!r.empty() && !mod_rem(r, gl, p).empty()) return false;
    if (d.g.size() != gl.size()) return false;
  }
  return true;
}

// Column subsets visited by gcd_minors: colex ranks 0, step, 2 step, ... modulo
// C(m, r), with step near C(m, r) / golden ratio and coprime to it. Consecutive
// colex subsets share almost all columns and tend to share extraneous factors.
class SubsetWalk {
 public:
  SubsetWalk(std::size_t m, std::size_t r) : m_(m), r_(r) {
    mpz_bin_uiui(total_.get_mpz_t(), m, r);
    if (total_ > 2) {
      mpf_class t(total_, 128);
      mpf_class phi = (mpf_class(5, 128) + 1) / 2;
      mpz_class s(t / phi);
      if (s < 1) s = 1;
      while (gcd(s, total_) != 1) ++s;
      step_ = s;
    }
  }
  const mpz_class& total() const { return total_; }
  std::vector<std::size_t> at(std::size_t k) const {
    mpz_class rank = (step_ * mpz_class(static_cast<unsigned long>(k))) % total_;
    // colex unranking through the combinatorial number system
    std::vector<std::size_t> out(r_);
    for (std::size_t i = r_; i >= 1; --i) {
      std::size_t c = i - 1;
      mpz_class b;
      for (;;) {
        mpz_bin_uiui(b.get_mpz_t(), c + 1, i);
        if (c + 1 >= m_ || b > rank) break;
        ++c;
      }
      mpz_bin_uiui(b.get_mpz_t(), c, i);
      rank -= b;
      out[i - 1] = c;
    }
    return out;
  }

 private:
  std::size_t m_, r_;
  mpz_class total_, step_ = 1;
};

// Seeded unipotent column operations within each block of equal T-degree. The ideal
// of maximal minors is unchanged and every minor stays homogeneous, but each sampled
// minor becomes a generic combination of the original ones.
MatrixRep mix_columns(const MatrixRep& m) {
  MatrixRep out = m;
  std::mt19937_64 rng(0x636f6c73ULL);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto& cols = out.columns;
  auto axpy = [&](std::size_t dst, std::size_t src) {
    long a = coef(rng);
    if (a == 0) return;
    Scalar s = m.field.from_int(a);
    for (std::size_t r = 0; r < cols[dst].entries.size(); ++r) cols[dst].entries[r] += cols[src].entries[r].scaled(s);
  };
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t k = j + 1; k < cols.size(); ++k)
      if (cols[k].tdegree == cols[j].tdegree) axpy(j, k);
  for (std::size_t j = cols.size(); j-- > 0;)
    for (std::size_t k = 0; k < j; ++k)
      if (cols[k].tdegree == cols[j].tdegree) axpy(j, k);
  return out;
}

}  // namespace

MultiPoly modular_gcd(const std::vector<MultiPoly>& polys) {
  std::vector<MultiPoly> nz;
  for (const auto& p : polys)
    if (!p.is_zero()) {
      if (!p.is_homogeneous()) throw std::invalid_argument("modular_gcd expects homogeneous polynomials");
      if (!p.field().is_rational()) throw std::invalid_argument("modular_gcd works over Q");
      nz.push_back(p);
    }
  if (nz.empty()) throw std::invalid_argument("gcd of zero polynomials");
  PolySource src(nz);
  MultiPoly g = modular_gcd_source(src, nullptr);
  if (!divides_on_line(src, g)) throw std::runtime_error("modular gcd failed its check");
  return g;
}

MinorsGcd gcd_minors_detail(const MatrixRep& input, std::size_t sample_budget, GcdMethod method) {
  const MatrixRep m = mix_columns(input);
  if (m.nrows() == 0) throw ValidationError("matrix has no rows");
  if (m.nrows() > m.ncols()) throw HypothesisViolation("fewer columns than rows: no maximal minors");
  sample_budget = std::max<std::size_t>(sample_budget, 3);
  if (method == GcdMethod::automatic)
    method = (!m.field.is_rational() || m.nrows() <= 6) ? GcdMethod::exact : GcdMethod::modular;
  if (method == GcdMethod::modular && !m.field.is_rational()) throw ValidationError("modular gcd needs rational input");
  MinorsGcd out;
  SubsetWalk walk(m.ncols(), m.nrows());
  const std::size_t limit = walk.total() < sample_budget ? walk.total().get_ui() : sample_budget;
  if (method == GcdMethod::exact) {
    out.method = "exact";
    MultiPoly g;
    bool have = false;
    while (out.scanned < limit) {
      auto c = walk.at(out.scanned++);
      MultiPoly d = det_bareiss(submatrix(m, c));
      if (d.is_zero()) continue;
      out.subsets.push_back(c);
      MultiPoly ng = have ? poly_gcd(g, d) : normalize_primitive(d);
      bool unchanged = have && ng == g;
      g = std::move(ng);
      have = true;
      if (out.subsets.size() >= 3 && unchanged) break;
    }
    if (!have) throw HypothesisViolation("all sampled maximal minors vanish");
    out.g = g;
    return out;
  }
  out.method = "modular";
  // choose minors by gcd degree along a fixed line
  U64 p = prime_at(0);
  std::mt19937_64 rng(0x6d696e6fULL);
  const std::size_t nt = m.t_names.size();
  auto u = random_point(nt, p, rng), v = random_point(nt, p, rng);
  MinorSource probe(m, {});
  probe.prepare(p);
  ModPoly g;
  while (out.scanned < limit) {
    auto c = walk.at(out.scanned++);
    probe.set_subsets({c});
    LineData d = on_line(probe, u, v, p);
    if (d.restr.front().empty()) continue;
    out.subsets.push_back(c);
    std::size_t before = g.size();
    g = g.empty() ? d.g : mod_gcd(g, d.restr.front(), p);
    bool unchanged = out.subsets.size() > 1 && g.size() == before;
    if (out.subsets.size() >= 3 && unchanged) break;
  }
  if (out.subsets.empty()) throw HypothesisViolation("all sampled maximal minors vanish");
  MinorSource src(m, out.subsets);
  out.g = modular_gcd_source(src, &out.primes);
  if (!divides_on_line(src, out.g)) throw std::runtime_error("modular minor gcd failed its check");
  return out;
}

MultiPoly gcd_minors(const MatrixRep& m, std::size_t sample_budget) { return gcd_minors_detail(m, sample_budget).g; }

ImplicitVerdict verify_implicit(const MultiPoly& h, const ParamSystem& sys) {
  if (h.is_zero()) throw ValidationError("implicit equation is zero");
  if (h.nvars() != sys.nforms()) throw ValidationError("implicit equation must use T0..Tn");
  ImplicitVerdict v;
  MultiPoly r = evaluate_T(h, sys);
  v.vanishes = r.is_zero();
  v.residual_degree = r.degree();
  v.primitive = normalize_primitive(h) == h || (h.field().is_rational() && normalize_primitive(h) == -h);
  for (std::size_t i = 0; i < h.nvars() && h.degree() > 1; ++i) {
    MultiPoly dh = h.derivative(i);
    if (dh.is_zero()) continue;
    MultiPoly g = h.field().is_rational() && h.is_homogeneous() && dh.is_homogeneous() ? modular_gcd({h, dh}) : poly_gcd(h, dh);
    if (g.degree() >= 1) {
      v.repeated_factor = true;
      if (g.degree() < h.degree() && evaluate_T(g, sys).is_zero()) v.vanishing_factor = g;
    }
    break;
  }
  return v;
}

Implicitization implicitize(KoszulLab& lab, int mu, std::optional<int> lmax) {
  MatrixRep m = build_matrix(lab, mu, lmax);
  Implicitization out;
  out.mu = mu;
  out.rows = m.nrows();
  out.cols = m.ncols();
  if (m.nrows() == m.ncols()) {
    out.equation = det_square(m);
    out.method = "determinant";
  } else {
    MinorsGcd g = gcd_minors_detail(m);
    out.equation = g.g;
    out.method = "gcd of maximal minors (" + g.method + ")";
  }
  out.degree = out.equation.degree();
  if (out.degree < 1) throw HypothesisViolation("extracted equation is constant");
  out.verdict = verify_implicit(out.equation, lab.system());
  return out;
}

}  // namespace mrep

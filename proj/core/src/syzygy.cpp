#include "mrep/syzygy.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "mrep/errors.hpp"
#include "mrep/parse.hpp"
#include "mrep/series.hpp"

namespace mrep {

BidegreeBasis bidegree_basis(const ParamSystem& sys, int mu, int ell) {
  return BidegreeBasis(sys.n(), sys.nforms(), mu, ell);
}

namespace {

// Columns X^x f^t of the substitution map S_{mu,l} -> R_{mu+ld}.
SparseColumns substitution_columns(const ParamSystem& sys, int mu, int ell) {
  BidegreeBasis b = bidegree_basis(sys, mu, ell);
  MonomialIndex target(monomial_basis(sys.n(), mu + ell * sys.d()));
  SparseColumns out(target.size(), sys.field());
  for (const auto& t : b.ts().basis()) {
    MultiPoly ft = sys.power_product(t);
    for (const auto& x : b.xs().basis()) {
      std::vector<std::pair<std::size_t, Scalar>> col;
      col.reserve(ft.size());
      for (const auto& [m, c] : ft.terms()) col.emplace_back(target.at(m * x), c);
      out.add_column(std::move(col));
    }
  }
  return out;
}

// Coordinate map S_{mu,l-1} -> S_{mu,l} for multiplication by T_i.
std::vector<std::size_t> t_shift(const ParamSystem& sys, int mu, int ell, std::size_t i) {
  BidegreeBasis src = bidegree_basis(sys, mu, ell - 1), dst = bidegree_basis(sys, mu, ell);
  Monomial ti = Monomial::variable(sys.nforms(), i);
  std::vector<std::size_t> map(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) map[k] = dst.index(src.x_of(k), src.t_of(k) * ti);
  return map;
}

ModMatrix to_mod(const SparseColumns& sc) {
  const std::uint64_t p = sc.field().characteristic();
  ModMatrix m{sc.rows(), sc.cols(), p, std::vector<std::uint64_t>(sc.rows() * sc.cols(), 0)};
  for (std::size_t j = 0; j < sc.cols(); ++j)
    for (const auto& [i, c] : sc.columns()[j]) {
      std::uint64_t s = m.at(i, j) + c.residue();
      m.at(i, j) = s >= p ? s - p : s;
    }
  return m;
}

std::vector<std::vector<std::uint64_t>> mod_kernel(ModMatrix m) {
  auto piv = mod_echelon(m, true);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<std::uint64_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      std::uint64_t e = m.at(r, f);
      v[piv[r]] = e ? m.p - e : 0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Vec primitive_integer(Vec v) {
  if (v.empty() || !v.front().field().is_rational()) {
    // normalize first nonzero to 1
    for (const auto& c : v)
      if (!c.is_zero()) {
        Scalar inv = c.inverse();
        for (auto& e : v) e *= inv;
        break;
      }
    return v;
  }
  mpz_class l = 1, g = 0;
  for (const auto& c : v)
    if (!c.is_zero()) l = lcm(l, mpz_class(c.rational().get_den()));
  for (const auto& c : v)
    if (!c.is_zero()) g = gcd(g, mpz_class(c.rational().get_num() * (l / c.rational().get_den())));
  if (g == 0) return v;
  int sign = 0;
  for (const auto& c : v)
    if (!c.is_zero()) {
      sign = c.sign();
      break;
    }
  mpq_class s(l, g);
  if (sign < 0) s = -s;
  s.canonicalize();
  for (auto& c : v) c *= Scalar(s);
  return v;
}

MatrixColumn column_from(const ParamSystem& sys, const BidegreeBasis& b, const Vec& coords) {
  MatrixColumn col;
  col.tdegree = b.ell();
  const std::size_t nr = b.xs().size();
  col.entries.assign(nr, MultiPoly(sys.nforms(), sys.field()));
  Vec v = primitive_integer(coords);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    col.entries[k % nr] += MultiPoly::monomial(b.t_of(k), v[k]);
  }
  return col;
}

}  // namespace

SyzygyBasis linear_syzygies(const ParamSystem& sys, int mu) {
  SyzygyBasis out;
  out.mu = mu;
  if (mu < 0) return out;
  const int nu = mu + sys.d();
  std::vector<Vec> z = kernel_basis(koszul_matrix(sys, 1, nu).dense());
  const std::size_t dim = monomial_count(sys.n(), mu) * sys.nforms();
  SparseColumns ks = koszul_matrix(sys, 2, nu);
  EchelonSpan span(dim, sys.field());
  std::vector<Vec> kbasis;
  for (const auto& col : ks.columns()) {
    Vec v(dim, sys.field().zero());
    for (const auto& [i, c] : col) v[i] += c;
    if (span.add(v)) kbasis.push_back(std::move(v));
  }
  std::vector<Vec> others = quotient_reps(z, kbasis, dim, sys.field());
  BidegreeBasis b = bidegree_basis(sys, mu, 1);
  auto push = [&](const Vec& v, bool koszul) {
    SyzygyVector s;
    s.coords = v;
    s.koszul = koszul;
    s.a.assign(sys.nforms(), MultiPoly(sys.n(), sys.field()));
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) s.a[k / b.xs().size()] += MultiPoly::monomial(b.x_of(k), v[k]);
    out.vectors.push_back(std::move(s));
  };
  for (const auto& v : kbasis) push(v, true);
  for (const auto& v : others) push(v, false);
  out.koszul_dim = kbasis.size();
  return out;
}

std::vector<Vec> algebra_equations(const ParamSystem& sys, int mu, int ell) {
  if (mu < 0 || ell < 0) return {};
  return kernel_basis(substitution_columns(sys, mu, ell).dense());
}

std::vector<Vec> koszul_span(const ParamSystem& sys, int mu, int ell) {
  std::vector<Vec> out;
  const int d = sys.d();
  if (mu < d || ell < 1) return out;
  BidegreeBasis b = bidegree_basis(sys, mu, ell);
  const std::size_t m = sys.nforms();
  auto xs = monomial_basis(sys.n(), mu - d);
  auto ts = monomial_basis(m, ell - 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Monomial ti = Monomial::variable(m, i), tj = Monomial::variable(m, j);
      for (const auto& x : xs)
        for (const auto& t : ts) {
          Vec v(b.size(), sys.field().zero());
          for (const auto& [mon, c] : sys.form(i).terms()) v[b.index(mon * x, t * tj)] += c;
          for (const auto& [mon, c] : sys.form(j).terms()) v[b.index(mon * x, t * ti)] -= c;
          out.push_back(std::move(v));
        }
    }
  return out;
}

std::vector<Vec> lower_order_slice(const ParamSystem& sys, int mu, int ell) {
  if (ell < 2) throw std::invalid_argument("lower_order_slice needs T-degree >= 2");
  std::vector<Vec> lower = algebra_equations(sys, mu, ell - 1);
  const std::size_t dim = bidegree_basis(sys, mu, ell).size();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < sys.nforms(); ++i) {
    auto map = t_shift(sys, mu, ell, i);
    for (const auto& v : lower) {
      Vec w(dim, sys.field().zero());
      for (std::size_t k = 0; k < v.size(); ++k) w[map[k]] = v[k];
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::size_t new_column_count(const ParamSystem& sys, int mu, int ell) {
  if (ell < 2) throw std::invalid_argument("new columns start at T-degree 2");
  if (mu < 0) return 0;
  const std::size_t dim = bidegree_basis(sys, mu, ell).size();
  if (sys.field().is_rational()) {
    std::size_t dj = dim - rank(substitution_columns(sys, mu, ell));
    return dj - span_dimension(lower_order_slice(sys, mu, ell), dim, sys.field());
  }
  const std::uint64_t p = sys.field().characteristic();
  std::size_t dj = dim - mod_rank(to_mod(substitution_columns(sys, mu, ell)));
  auto lower = mod_kernel(to_mod(substitution_columns(sys, mu, ell - 1)));
  ModMatrix w{lower.size() * sys.nforms(), dim, p, {}};
  w.a.assign(w.rows * w.cols, 0);
  std::size_t r = 0;
  for (std::size_t i = 0; i < sys.nforms(); ++i) {
    auto map = t_shift(sys, mu, ell, i);
    for (const auto& v : lower) {
      for (std::size_t k = 0; k < v.size(); ++k) w.at(r, map[k]) = v[k];
      ++r;
    }
  }
  std::size_t dw = mod_rank(std::move(w));
  if (dw > dj) throw std::logic_error("lower-order slice larger than the equation slice");
  return dj - dw;
}

std::size_t predicted_new_columns(KoszulLab& lab, int mu, int ell) {
  const int n = static_cast<int>(lab.n()), d = lab.d();
  std::size_t v = lab.h0m_h1(mu + ell * d);
  if (ell >= 3) v += lab.sat_codim((n + 1 - ell) * d - n - mu);
  return v;
}

SliceQuotient new_columns(KoszulLab& lab, int mu, int ell, bool strict) {
  const ParamSystem& sys = lab.system();
  SliceQuotient q;
  q.mu = mu;
  q.ell = ell;
  q.predicted_rank = predicted_new_columns(lab, mu, ell);
  q.guaranteed = mu >= lab.mu0();
  q.count = new_column_count(lab.work(), mu, ell);
  BidegreeBasis b = bidegree_basis(sys, mu, ell);
  if (q.count > 0) {
    std::vector<Vec> u = algebra_equations(sys, mu, ell);
    std::vector<Vec> w = lower_order_slice(sys, mu, ell);
    q.coords = quotient_reps(u, w, b.size(), sys.field());
    if (q.coords.size() != q.count)
      throw std::logic_error("exact new-column count " + std::to_string(q.coords.size()) +
                             " disagrees with the rank computed over " + lab.work().field().to_string());
    for (const auto& v : q.coords) q.reps.push_back(b.element(v, sys.field()));
  }
  if (strict && q.guaranteed && q.count != q.predicted_rank)
    throw HypothesisViolation("new columns at (mu, l) = (" + std::to_string(mu) + ", " + std::to_string(ell) + "): found " +
                              std::to_string(q.count) + ", predicted " + std::to_string(q.predicted_rank));
  return q;
}

std::size_t MatrixRep::count_tdegree(int ell) const {
  return static_cast<std::size_t>(
      std::count_if(columns.begin(), columns.end(), [&](const MatrixColumn& c) { return c.tdegree == ell; }));
}

MatrixRep build_matrix(KoszulLab& lab, int mu, std::optional<int> lmax) {
  if (mu < 0) throw ValidationError("mu must be nonnegative");
  const ParamSystem& sys = lab.system();
  const int top = lmax.value_or(static_cast<int>(sys.n()));
  if (top < 1) throw ValidationError("lmax must be at least 1");
  MatrixRep m;
  m.mu = mu;
  m.rows = monomial_basis(sys.n(), mu);
  m.x_names = sys.x_names();
  m.t_names = sys.t_names();
  m.field = sys.field();
  m.warnings = lab.report().warnings;

  SyzygyBasis z = linear_syzygies(sys, mu);
  BidegreeBasis b1 = bidegree_basis(sys, mu, 1);
  for (const auto& s : z.vectors) m.columns.push_back(column_from(sys, b1, s.coords));
  m.predicted[1] = lab.slice(1, mu + sys.d()).dim_Z;
  m.actual[1] = z.vectors.size();
  for (int ell = 2; ell <= top; ++ell) {
    SliceQuotient q = new_columns(lab, mu, ell);
    BidegreeBasis b = bidegree_basis(sys, mu, ell);
    for (const auto& v : q.coords) m.columns.push_back(column_from(sys, b, v));
    m.predicted[ell] = q.predicted_rank;
    m.actual[ell] = q.count;
  }
  return m;
}

MatrixRep build_matrix(const ParamSystem& sys, int mu, std::optional<int> lmax, LabOptions opts) {
  KoszulLab lab(sys, opts);
  return build_matrix(lab, mu, lmax);
}

bool columns_are_equations(const MatrixRep& m, const ParamSystem& sys) {
  for (const auto& col : m.columns) {
    MultiPoly acc(sys.n(), sys.field());
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      if (!col.entries[r].is_zero()) acc += evaluate_T(col.entries[r], sys).times_monomial(m.rows[r], sys.field().one());
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::string matrix_text(const MatrixRep& m) {
  std::vector<std::vector<std::string>> cells(m.nrows() + 1, std::vector<std::string>(m.ncols() + 1));
  for (std::size_t j = 0; j < m.ncols(); ++j) cells[0][j + 1] = "[l=" + std::to_string(m.columns[j].tdegree) + "]";
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    cells[i + 1][0] = monomial_string(m.rows[i], m.x_names);
    for (std::size_t j = 0; j < m.ncols(); ++j) cells[i + 1][j + 1] = print_poly(m.columns[j].entries[i], m.t_names);
  }
  std::vector<std::size_t> w(m.ncols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], row[j].size());
  std::ostringstream os;
  os << "M_" << m.mu << ": " << m.nrows() << " x " << m.ncols() << "\n";
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) os << std::left << std::setw(static_cast<int>(w[j]) + 2) << row[j];
    os << "\n";
  }
  return os.str();
}

long resolution_b_formula(std::size_t n, int d, int mu, int i) {
  long total = 0;
  for (int k = 1; i + k <= static_cast<int>(n) + 1 && k * d <= mu; ++k) {
    mpz_class term = binomial(static_cast<long>(n) + 1, i + k) * binomial(mu - k * d + static_cast<long>(n) - 1, static_cast<long>(n) - 1);
    total += (k % 2 ? 1 : -1) * term.get_si();
  }
  return total;
}

ResolutionRanks resolution_ranks(KoszulLab& lab, int mu) {
  if (!lab.mprimary()) throw HypothesisViolation("resolution ranks need an m-primary ideal");
  const int n = static_cast<int>(lab.n()), d = lab.d();
  ResolutionRanks r;
  r.mu = mu;
  for (int i = 1; i <= n + 1; ++i) {
    r.b[i] = resolution_b_formula(lab.n(), d, mu, i);
    r.b_direct[i] = static_cast<long>(lab.rank_d(i + 1, mu + i * d));
  }
  for (int ell = 1; ell <= n; ++ell) {
    int deg = (n + 1 - ell) * d - n - mu;
    r.beta[ell] = deg < 0 ? 0 : lab.hilbert(deg);
    r.beta_direct[ell] = ell == 1 ? lab.slice(1, mu + d).dim_H : new_column_count(lab.work(), mu, ell);
  }
  for (int i = 1; i <= n + 1; ++i)
    if (r.b[i] != r.b_direct[i])
      throw HypothesisViolation("b_" + std::to_string(i) + " formula " + std::to_string(r.b[i]) + " != direct " +
                                std::to_string(r.b_direct[i]));
  for (int ell = 1; ell <= n; ++ell)
    if (r.beta[ell] != r.beta_direct[ell])
      throw HypothesisViolation("beta_" + std::to_string(ell) + " formula " + std::to_string(r.beta[ell]) +
                                " != direct " + std::to_string(r.beta_direct[ell]));
  return r;
}

int tuned_mu(KoszulLab& lab, int l) {
  const int n = static_cast<int>(lab.n()), d = lab.d();
  if (l < 1 || l > (n + 2) / 2) throw ValidationError("syzygy order must lie in [1, " + std::to_string((n + 2) / 2) + "]");
  return std::max((n - l) * (d - 1) - (l - 1), lab.mu0());
}

CgzReport cgz_condition(KoszulLab& lab) {
  if (lab.n() != 3) throw ValidationError("the rank condition is stated for three variables");
  if (!lab.mprimary()) throw HypothesisViolation("the rank condition needs an m-primary ideal");
  const int d = lab.d();
  CgzReport c;
  c.dim_Z1 = lab.slice(1, 2 * d - 1).dim_Z;
  c.condition = c.dim_Z1 == static_cast<std::size_t>(d);
  c.mu0 = lab.mu0();
  if (c.condition) {
    c.mu0_ok = c.mu0 == d - 1;
    MatrixRep m = build_matrix(lab, c.mu0);
    c.rows = m.nrows();
    c.cols = m.ncols();
    c.square = c.rows == c.cols;
  }
  return c;
}

}  // namespace mrep

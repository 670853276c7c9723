#include "mrep/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrep/modular.hpp"

namespace mrep {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, Field field) {
  ExactMatrix m(rows, cols.size(), field);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, Field field) {
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& rows, Field field) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), c, field);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = field.from_int(rows[i].at(j));
  return m;
}

Vec ExactMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec ExactMatrix::column(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec ExactMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec y(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

ModMatrix to_mod(const ExactMatrix& m) {
  ModMatrix r{m.rows(), m.cols(), m.field().characteristic(), std::vector<std::uint64_t>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.a[i * m.cols() + j] = m.at(i, j).residue();
  return r;
}

// Denominators cleared by rows or by columns, whichever gives fewer bits, then
// fraction-free (Bareiss) elimination to row echelon form. Entries of the result
// are minors of the scaled input; col_scale is empty when rows were scaled.
struct IntEchelon {
  std::size_t rows, cols;
  std::vector<mpz_class> a;
  std::vector<std::size_t> pivots;
  std::vector<mpz_class> col_scale;
  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

IntEchelon bareiss(const ExactMatrix& m) {
  IntEchelon e{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols()), {}, {}};
  std::vector<mpz_class> row_lcm(m.rows(), mpz_class(1)), col_lcm(m.cols(), mpz_class(1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpz_class& den = m.at(i, j).rational().get_den();
      if (den == 1) continue;
      mpz_lcm(row_lcm[i].get_mpz_t(), row_lcm[i].get_mpz_t(), den.get_mpz_t());
      mpz_lcm(col_lcm[j].get_mpz_t(), col_lcm[j].get_mpz_t(), den.get_mpz_t());
    }
  std::size_t row_bits = 0, col_bits = 0;
  for (const auto& l : row_lcm) row_bits += mpz_sizeinbase(l.get_mpz_t(), 2);
  for (const auto& l : col_lcm) col_bits += mpz_sizeinbase(l.get_mpz_t(), 2);
  const bool by_cols = col_bits < row_bits;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m.at(i, j).rational();
      if (sgn(q) == 0) continue;
      const mpz_class& l = by_cols ? col_lcm[j] : row_lcm[i];
      e.at(i, j) = q.get_num() * (l / q.get_den());
    }
  if (by_cols) e.col_scale = std::move(col_lcm);
  std::vector<mpz_class*> row(e.rows);
  for (std::size_t i = 0; i < e.rows; ++i) row[i] = e.a.data() + i * e.cols;
  mpz_class prev = 1, tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::size_t piv = r;
    // smallest nonzero pivot keeps entries small
    for (std::size_t i = r; i < e.rows; ++i) {
      if (sgn(row[i][c]) == 0) continue;
      if (sgn(row[piv][c]) == 0 || mpz_cmpabs(row[i][c].get_mpz_t(), row[piv][c].get_mpz_t()) < 0) piv = i;
    }
    if (sgn(row[piv][c]) == 0) continue;
    std::swap(row[piv], row[r]);
    mpz_class* pr = row[r];
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      mpz_class* pi = row[i];
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        mpz_mul(tmp.get_mpz_t(), pr[c].get_mpz_t(), pi[j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), pi[c].get_mpz_t(), pr[j].get_mpz_t());
        mpz_divexact(pi[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      pi[c] = 0;
    }
    prev = pr[c];
    e.pivots.push_back(c);
    ++r;
  }
  std::vector<mpz_class> out(e.a.size());
  for (std::size_t i = 0; i < e.rows; ++i)
    for (std::size_t j = 0; j < e.cols; ++j) out[i * e.cols + j] = std::move(row[i][j]);
  e.a.swap(out);
  return e;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
  const Field& f = m.field();
  RrefResult res{ExactMatrix(m.rows(), m.cols(), f), {}, 0};
  if (!f.is_rational()) {
    ModMatrix mm = to_mod(m);
    res.pivots = mod_echelon(mm, true);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) res.reduced.at(i, j) = Scalar::residue(mm.at(i, j), mm.p);
    res.rank = res.pivots.size();
    return res;
  }
  IntEchelon e = bareiss(m);
  std::size_t r = e.pivots.size();
  // back substitution over Q, one pivot row at a time from the bottom
  std::vector<std::vector<mpq_class>> rows(r, std::vector<mpq_class>(m.cols()));
  for (std::size_t k = 0; k < r; ++k) {
    mpz_class piv = e.at(k, e.pivots[k]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(e.at(k, j)) == 0) continue;
      rows[k][j] = mpq_class(e.at(k, j), piv);
      rows[k][j].canonicalize();
    }
  }
  for (std::size_t k = r; k-- > 0;) {
    std::size_t pc = e.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(rows[i][pc]) == 0) continue;
      mpq_class fct = rows[i][pc];
      for (std::size_t j = pc; j < m.cols(); ++j)
        if (sgn(rows[k][j]) != 0) rows[i][j] -= fct * rows[k][j];
    }
  }
  // rref(M D) = rref(M) D up to rescaling each row by its pivot
  if (!e.col_scale.empty())
    for (std::size_t k = 0; k < r; ++k) {
      const mpz_class& dp = e.col_scale[e.pivots[k]];
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(rows[k][j]) != 0) {
          rows[k][j] *= mpq_class(dp, e.col_scale[j]);
          rows[k][j].canonicalize();
        }
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < m.cols(); ++j) res.reduced.at(k, j) = Scalar(rows[k][j]);
  res.pivots = e.pivots;
  res.rank = r;
  return res;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!m.field().is_rational()) return mod_rank(to_mod(m));
  return bareiss(m.rows() <= m.cols() ? m : m.transpose()).pivots.size();
}

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced.at(k, free);
    for (const auto& x : v)
      if (!x.is_zero()) {
        Scalar inv = x.inverse();
        for (auto& y : v) y *= inv;
        break;
      }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const ExactMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), a.field().zero());
  for (std::size_t k = 0; k < r.rank; ++k) x[r.pivots[k]] = r.reduced.at(k, a.cols());
  return x;
}

namespace {

void make_primitive(std::vector<mpz_class>& v, mpq_class& scale) {
  mpz_class g = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  if (g == 0 || g == 1) return;
  for (auto& x : v)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  scale /= g;
}

}  // namespace

std::vector<mpz_class> EchelonSpan::zreduce(const Vec& v, mpq_class& scale) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonSpan: vector length mismatch");
  mpz_class l = 1;
  for (const auto& x : v) {
    const mpz_class& den = x.rational().get_den();
    if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> w(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const mpq_class& q = v[j].rational();
    if (sgn(q) != 0) w[j] = q.get_num() * (l / q.get_den());
  }
  scale = l;
  make_primitive(w, scale);
  mpz_class a, b, g;
  for (std::size_t k = 0; k < zrows_.size(); ++k) {
    const std::size_t p = zpiv_[k];
    if (sgn(w[p]) == 0) continue;
    const auto& r = zrows_[k];
    // w <- (r_p / g) w - (w_p / g) r
    mpz_gcd(g.get_mpz_t(), r[p].get_mpz_t(), w[p].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), r[p].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), w[p].get_mpz_t(), g.get_mpz_t());
    if (a != 1)
      for (auto& x : w)
        if (sgn(x) != 0) x *= a;
    for (std::size_t j = p; j < dim_; ++j)
      if (sgn(r[j]) != 0) mpz_submul(w[j].get_mpz_t(), b.get_mpz_t(), r[j].get_mpz_t());
    scale *= a;
    make_primitive(w, scale);
  }
  return w;
}

Vec EchelonSpan::reduce(Vec v) const {
  if (field_.is_rational()) {
    mpq_class scale;
    std::vector<mpz_class> w = zreduce(v, scale);
    for (std::size_t j = 0; j < dim_; ++j) {
      mpq_class q(w[j]);
      q /= scale;
      v[j] = Scalar(q);
    }
    return v;
  }
  if (v.size() != dim_) throw std::invalid_argument("EchelonSpan: vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = v[piv_[k]];
    if (c.is_zero()) continue;
    const Vec& r = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) v[j] -= c * r[j];
  }
  return v;
}

bool EchelonSpan::add(const Vec& v) {
  if (field_.is_rational()) {
    mpq_class scale;
    std::vector<mpz_class> w = zreduce(v, scale);
    std::size_t p = 0;
    while (p < dim_ && sgn(w[p]) == 0) ++p;
    if (p == dim_) return false;
    auto pos = std::lower_bound(zpiv_.begin(), zpiv_.end(), p);
    auto at = pos - zpiv_.begin();
    zpiv_.insert(pos, p);
    zrows_.insert(zrows_.begin() + at, std::move(w));
    return true;
  }
  Vec w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = w[p].inverse();
  for (auto& x : w) x *= inv;
  // keep existing rows reduced at the new pivot
  for (auto& r : rows_) {
    if (r[p].is_zero()) continue;
    Scalar c = r[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!w[j].is_zero()) r[j] -= c * w[j];
  }
  rows_.push_back(std::move(w));
  piv_.push_back(p);
  return true;
}

bool EchelonSpan::contains(const Vec& v) const {
  if (field_.is_rational()) {
    mpq_class scale;
    for (const auto& x : zreduce(v, scale))
      if (sgn(x) != 0) return false;
    return true;
  }
  for (const auto& x : reduce(v))
    if (!x.is_zero()) return false;
  return true;
}

std::size_t span_dimension(const std::vector<Vec>& vs, std::size_t dim, Field field) {
  if (vs.empty()) return 0;
  return rank(ExactMatrix::from_rows(vs, dim, field));
}

std::vector<Vec> quotient_reps(const std::vector<Vec>& u, const std::vector<Vec>& w, std::size_t dim, Field field) {
  EchelonSpan uspan(dim, field);
  for (const auto& v : u) uspan.add(v);
  for (const auto& v : w)
    if (!uspan.contains(v)) throw std::invalid_argument("quotient_reps: W is not contained in U");
  EchelonSpan span(dim, field);
  for (const auto& v : w) span.add(v);
  std::vector<Vec> reps;
  for (const auto& v : u)
    if (span.add(v)) reps.push_back(v);
  return reps;
}

void SparseColumns::add_column(std::vector<std::pair<std::size_t, Scalar>> entries) {
  for (const auto& e : entries)
    if (e.first >= rows_) throw std::out_of_range("sparse column entry out of range");
  cols_.push_back(std::move(entries));
}

ExactMatrix SparseColumns::dense() const {
  ExactMatrix m(rows_, cols_.size(), field_);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, c] : cols_[j]) m.at(i, j) += c;
  return m;
}

std::size_t rank(const SparseColumns& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_rational()) return rank(m.dense());
  // transpose while densifying: columns become rows
  ModMatrix mm{m.cols(), m.rows(), m.field().characteristic(), std::vector<std::uint64_t>(m.rows() * m.cols(), 0)};
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.columns()[j]) {
      std::uint64_t& slot = mm.at(j, i);
      slot = (slot + c.residue()) % mm.p;
    }
  return mod_rank(std::move(mm));
}

}  // namespace mrep

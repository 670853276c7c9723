#include "mrep/appendix.hpp"

#include <map>

#include "mrep/errors.hpp"
#include "mrep/linalg.hpp"
#include "mrep/modular.hpp"

namespace mrep {

CubeAlgebra::CubeAlgebra(std::size_t n, unsigned m) : n_(n), m_(m) {
  if (n < 1 || n > kMaxVars) throw ValidationError("cube algebra needs 1 <= n <= " + std::to_string(kMaxVars));
  if (m < 1) throw ValidationError("cube algebra needs m >= 1");
}

std::vector<Monomial> CubeAlgebra::basis(int k) const {
  std::vector<Monomial> out;
  if (k < 0 || k > top()) return out;
  for (auto& mono : monomial_basis(n_, k)) {
    bool keep = true;
    for (std::size_t i = 0; i < n_ && keep; ++i) keep = mono[i] < m_;
    if (keep) out.push_back(mono);
  }
  return out;
}

mpz_class CubeAlgebra::model_dim(int k) const {
  if (k < 0) return 0;
  IntSeries geo(m_, mpz_class(1));
  IntSeries s = series_pow(geo, static_cast<unsigned>(n_));
  return static_cast<std::size_t>(k) < s.size() ? s[k] : mpz_class(0);
}

namespace {

using IntVec = std::map<std::size_t, mpz_class>;

// Columns of an integer matrix: image of each source basis vector.
std::size_t certified_rank(const std::vector<IntVec>& cols, std::size_t rows) {
  const std::size_t full = std::min(rows, cols.size());
  if (full == 0) return 0;
  ModMatrix mm;
  mm.rows = rows;
  mm.cols = cols.size();
  mm.a.assign(rows * cols.size(), 0);
  const mpz_class p(std::to_string(kMersenne61));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [i, v] : cols[j]) {
      mpz_class r = v % p;
      if (r < 0) r += p;
      mm.at(i, j) = std::stoull(r.get_str());
    }
  // a full rank modulo p is a full rank over Q
  std::size_t r = mod_rank(mm);
  if (r == full) return r;
  ExactMatrix em(rows, cols.size(), Field::rationals());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& [i, v] : cols[j]) em.at(i, j) = Scalar(mpq_class(v));
  return rank(em);
}

}  // namespace

LefschetzVerdict lefschetz_check(std::size_t n, unsigned m, int k, unsigned t, bool strict) {
  CubeAlgebra alg(n, m);
  LefschetzVerdict v;
  v.n = n;
  v.m = m;
  v.k = k;
  v.t = t;
  const int top = alg.top();
  auto src = alg.basis(k);
  MonomialIndex dst(alg.basis(k + static_cast<int>(t)));
  v.source_dim = src.size();
  v.target_dim = dst.size();
  std::vector<IntVec> cols;
  for (const auto& mono : src) {
    // multiply by omega t times, dropping monomials outside the cube
    std::map<std::vector<unsigned>, mpz_class> cur{{mono.to_vector(), 1}};
    for (unsigned s = 0; s < t; ++s) {
      std::map<std::vector<unsigned>, mpz_class> next;
      for (auto& [e, c] : cur)
        for (std::size_t i = 0; i < n; ++i) {
          if (e[i] + 1 >= m) continue;
          auto f = e;
          ++f[i];
          next[f] += c;
        }
      cur = std::move(next);
    }
    IntVec col;
    for (auto& [e, c] : cur)
      if (c != 0) col[dst.at(Monomial::from_vector(e))] = c;
    cols.push_back(std::move(col));
  }
  v.rank = certified_rank(cols, dst.size());
  v.injective = v.rank == v.source_dim;
  v.surjective = v.rank == v.target_dim;
  v.expected_inj = 2 * k + static_cast<int>(t) <= top;
  v.expected_surj = 2 * k + static_cast<int>(t) >= top;
  if (strict && !v.holds())
    throw TheoremViolation("multiplication by omega^" + std::to_string(t) + " from degree " + std::to_string(k) +
                           " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") has rank " +
                           std::to_string(v.rank));
  return v;
}

SignVerdict sign_pattern(unsigned n, unsigned d, bool strict) {
  if (n < 2 || d < 2) throw ValidationError("sign pattern needs n >= 2 and d >= 2");
  SignVerdict v;
  v.n = n;
  v.d = d;
  const int N = static_cast<int>(n * (d - 1) + 1);
  v.c = poly_series_coeffs(series_pow(one_minus_t_pow(d), n), series_pow(one_minus_t_pow(1), n - 1),
                           static_cast<int>(n * d));
  auto c = [&](int i) { return i >= 0 && static_cast<std::size_t>(i) < v.c.size() ? v.c[i] : mpz_class(0); };
  const int half = static_cast<int>(n * (d - 1)) / 2;
  v.positive_head = true;
  for (int i = 0; i <= half; ++i) v.positive_head = v.positive_head && c(i) > 0;
  // ceil(n(d-1)/2 + 1)
  const int tail = static_cast<int>(n * (d - 1) + 1) / 2 + 1;
  v.negative_tail = true;
  for (int i = tail; i <= N; ++i) v.negative_tail = v.negative_tail && c(i) < 0;
  v.middle_zero = N % 2 == 1 || c(N / 2) == 0;
  if (static_cast<int>(v.c.size()) != N + 1) v.negative_tail = false;
  if (strict && !v.holds())
    throw TheoremViolation("sign pattern fails for n=" + std::to_string(n) + ", d=" + std::to_string(d));
  return v;
}

namespace {

mpz_class factorial(unsigned k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

void check_lemme_range(unsigned m, unsigned t, unsigned j) {
  if (j < 1 || j > std::min(m, t))
    throw ValidationError("P_j needs 1 <= j <= min(m, t); got m=" + std::to_string(m) + ", t=" + std::to_string(t) +
                          ", j=" + std::to_string(j));
}

// Dense bivariate integer polynomial truncated at x^mx and a^ma; c[i][s] is the
// coefficient of x^i a^s.
using Dense2 = std::vector<std::vector<mpz_class>>;

Dense2 truncated_product(const Dense2& f, const Dense2& g, unsigned mx, unsigned ma) {
  Dense2 out(mx, std::vector<mpz_class>(ma));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t s = 0; s < f[i].size(); ++s) {
      if (f[i][s] == 0) continue;
      for (std::size_t k = 0; k < g.size() && i + k < mx; ++k)
        for (std::size_t r = 0; r < g[k].size() && s + r < ma; ++r) out[i + k][s + r] += f[i][s] * g[k][r];
    }
  return out;
}

// (x + a)^t truncated.
Dense2 binomial_power(unsigned t, unsigned mx, unsigned ma) {
  Dense2 out(mx, std::vector<mpz_class>(ma));
  for (unsigned i = 0; i <= t && i < mx; ++i)
    if (t - i < ma) out[i][t - i] = binomial(t, i);
  return out;
}

// Integer coefficient of (-a)^i x^(m-j-i) in P_j, the polynomial part of
// (d/dx)^(t-j) (x^(m+t-j) / (x+a)^j).
mpz_class pj_coefficient(unsigned m, unsigned t, unsigned j, unsigned i) {
  return factorial(m + t - 2 * j - i) * factorial(j + i - 1) /
         (factorial(m - j - i) * factorial(j - 1) * factorial(i));
}

Dense2 pj_dense(unsigned m, unsigned t, unsigned j, unsigned ma) {
  Dense2 out(m, std::vector<mpz_class>(ma));
  for (unsigned i = 0; i <= m - j; ++i) {
    if (i >= ma) break;
    mpz_class c = pj_coefficient(m, t, j, i);
    out[m - j - i][i] = i % 2 ? mpz_class(-c) : c;
  }
  return out;
}

}  // namespace

MultiPoly oesterle_Pj(unsigned m, unsigned t, unsigned j) {
  check_lemme_range(m, t, j);
  std::vector<Term> terms;
  for (unsigned i = 0; i <= m - j; ++i) {
    mpz_class c = pj_coefficient(m, t, j, i);
    if (i % 2) c = -c;
    terms.emplace_back(Monomial{m - j - i, i}, Scalar(mpq_class(c)));
  }
  return MultiPoly::from_terms(2, Field::rationals(), std::move(terms));
}

AnnihilationVerdict annihilation_check(unsigned m, unsigned t, unsigned j, bool strict) {
  check_lemme_range(m, t, j);
  AnnihilationVerdict v;
  v.m = m;
  v.t = t;
  v.j = j;
  v.a_order = m + t + 1 - 2 * j;
  Dense2 prod = truncated_product(binomial_power(t, m, v.a_order), pj_dense(m, t, j, v.a_order), m, v.a_order);
  v.annihilated = true;
  for (auto& row : prod)
    for (auto& c : row) v.annihilated = v.annihilated && c == 0;
  if (strict && !v.annihilated)
    throw TheoremViolation("(x+a)^t P_j is not zero for m=" + std::to_string(m) + ", t=" + std::to_string(t) +
                           ", j=" + std::to_string(j));
  return v;
}

KernelVerdict kernel_structure_check(unsigned m, unsigned t, unsigned N, bool strict) {
  if (m < 1 || N < 1) throw ValidationError("kernel check needs m >= 1 and N >= 1");
  KernelVerdict v;
  v.m = m;
  v.t = t;
  v.N = N;
  const std::size_t dim = static_cast<std::size_t>(m) * N;
  auto index = [N](std::size_t i, std::size_t s) { return i * N + s; };
  auto flatten = [&](const Dense2& f) {
    Vec out(dim, Scalar(0L));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t s = 0; s < N; ++s) out[index(i, s)] = Scalar(mpq_class(f[i][s]));
    return out;
  };
  const Dense2 w = binomial_power(t, m, N);
  ExactMatrix mult(dim, dim, Field::rationals());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < N; ++s) {
      Dense2 e(m, std::vector<mpz_class>(N));
      e[i][s] = 1;
      Vec col = flatten(truncated_product(w, e, m, N));
      for (std::size_t r = 0; r < dim; ++r) mult.at(r, index(i, s)) = col[r];
    }
  v.observed = dim - rank(mult);
  // admissible b_j are the multiples of a^(N - min(N, e_j)) with e_j = m + t + 1 - 2j
  std::vector<Vec> span;
  for (unsigned j = 1; j <= std::min(m, t); ++j) {
    const unsigned e = m + t + 1 - 2 * j;
    const unsigned free = std::min(N, e);
    v.predicted += free;
    Dense2 pj = pj_dense(m, t, j, N);
    for (unsigned s = N - free; s < N; ++s) {
      Dense2 as(1, std::vector<mpz_class>(N));
      as[0][s] = 1;
      span.push_back(flatten(truncated_product(as, pj, m, N)));
    }
  }
  v.span_dim = span_dimension(span, dim, Field::rationals());
  v.span_in_kernel = true;
  for (const auto& s : span) {
    Vec img = mult.apply(s);
    for (const auto& c : img) v.span_in_kernel = v.span_in_kernel && c.is_zero();
  }
  if (strict && !v.holds())
    throw TheoremViolation("kernel of (x+a)^t has dimension " + std::to_string(v.observed) + ", expected " +
                           std::to_string(v.predicted) + " (m=" + std::to_string(m) + ", t=" + std::to_string(t) +
                           ", N=" + std::to_string(N) + ")");
  return v;
}

std::vector<GridPoint> lefschetz_grid(std::size_t n, unsigned m) {
  CubeAlgebra alg(n, m);
  std::vector<GridPoint> out;
  for (int k = 0; k <= alg.top(); ++k)
    for (unsigned t = 0; t <= static_cast<unsigned>(alg.top()) + 1; ++t) {
      auto v = lefschetz_check(n, m, k, t, false);
      out.push_back({"k=" + std::to_string(k) + " t=" + std::to_string(t), v.holds(),
                     "rank " + std::to_string(v.rank) + " of " + std::to_string(v.source_dim) + "->" +
                         std::to_string(v.target_dim)});
    }
  return out;
}

std::vector<GridPoint> lemme_grid(unsigned m, unsigned t, unsigned Nmax) {
  std::vector<GridPoint> out;
  for (unsigned j = 1; j <= std::min(m, t); ++j) {
    auto v = annihilation_check(m, t, j, false);
    out.push_back({"annihilation j=" + std::to_string(j), v.annihilated, "a order " + std::to_string(v.a_order)});
  }
  for (unsigned N = 1; N <= Nmax; ++N) {
    auto v = kernel_structure_check(m, t, N, false);
    out.push_back({"kernel N=" + std::to_string(N), v.holds(),
                   "observed " + std::to_string(v.observed) + " predicted " + std::to_string(v.predicted)});
  }
  return out;
}

}  // namespace mrep

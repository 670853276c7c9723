#include "mrep/koszul.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "mrep/errors.hpp"
#include "mrep/series.hpp"

namespace mrep {

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > m) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

std::uint32_t mask_of(const std::vector<std::size_t>& s) {
  std::uint32_t m = 0;
  for (auto i : s) m |= 1u << i;
  return m;
}

bool is_rational_field(const ParamSystem& s) { return s.field().is_rational(); }

}  // namespace

SparseColumns koszul_matrix(const ParamSystem& sys, int i, int nu) {
  const std::size_t n = sys.n(), m = sys.nforms();
  const int d = sys.d();
  const int src_deg = nu - i * d, dst_deg = nu - (i - 1) * d;
  auto dst_sets = subsets(m, static_cast<std::size_t>(i - 1));
  std::map<std::uint32_t, std::size_t> dst_pos;
  for (std::size_t k = 0; k < dst_sets.size(); ++k) dst_pos[mask_of(dst_sets[k])] = k;
  MonomialIndex dst_mon(monomial_basis(n, dst_deg));
  std::size_t rows = dst_sets.size() * dst_mon.size();
  SparseColumns out(rows, sys.field());
  if (src_deg < 0 || i < 1 || static_cast<std::size_t>(i) > m) return out;
  auto src_sets = subsets(m, static_cast<std::size_t>(i));
  auto src_mon = monomial_basis(n, src_deg);
  for (const auto& s : src_sets) {
    for (const auto& g : src_mon) {
      std::vector<std::pair<std::size_t, Scalar>> col;
      for (std::size_t r = 0; r < s.size(); ++r) {
        std::uint32_t rest = mask_of(s) & ~(1u << s[r]);
        std::size_t base = dst_pos.at(rest) * dst_mon.size();
        bool neg = r % 2 == 1;
        for (const auto& [mon, c] : sys.form(s[r]).terms())
          col.emplace_back(base + dst_mon.at(mon * g), neg ? -c : c);
      }
      out.add_column(std::move(col));
    }
  }
  return out;
}

namespace {

// Left kernel of a sparse matrix: functionals vanishing on its column space.
std::vector<Vec> left_kernel(const SparseColumns& m) {
  ExactMatrix t(m.cols(), m.rows(), m.field());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.columns()[j]) t.at(j, i) += c;
  return kernel_basis(t);
}

std::vector<Vec> sat_space_at(const ParamSystem& sys, int nu, int s) {
  const std::size_t n = sys.n();
  const int t = nu + s;
  const Field& f = sys.field();
  auto rnu = monomial_basis(n, nu);
  std::vector<Vec> lam = left_kernel(koszul_matrix(sys, 1, t));
  if (lam.empty()) {
    std::vector<Vec> all;
    for (std::size_t k = 0; k < rnu.size(); ++k) {
      Vec v(rnu.size(), f.zero());
      v[k] = f.one();
      all.push_back(std::move(v));
    }
    return all;
  }
  MonomialIndex rt(monomial_basis(n, t));
  auto shifts = monomial_basis(n, s);
  ExactMatrix stacked(shifts.size() * lam.size(), rnu.size(), f);
  std::size_t row = 0;
  for (const auto& m : shifts) {
    std::vector<std::size_t> target(rnu.size());
    for (std::size_t a = 0; a < rnu.size(); ++a) target[a] = rt.at(rnu[a] * m);
    for (const auto& l : lam) {
      for (std::size_t a = 0; a < rnu.size(); ++a) stacked.at(row, a) = l[target[a]];
      ++row;
    }
  }
  return kernel_basis(stacked);
}

std::vector<Vec> sat_basis(const ParamSystem& sys, int nu) {
  if (nu < 0) return {};
  const int n = static_cast<int>(sys.n()), d = sys.d();
  const int cap = n * (d - 1) + d + 2;
  int s = std::max(1, n * (d - 1) - nu);
  std::vector<Vec> prev = sat_space_at(sys, nu, s);
  for (++s; s <= cap + 1; ++s) {
    std::vector<Vec> next = sat_space_at(sys, nu, s);
    if (next.size() == prev.size()) return prev;
    prev = std::move(next);
  }
  throw StabilizationError("saturation in degree " + std::to_string(nu) + " did not stabilize by s = " +
                           std::to_string(cap));
}

// Kernel of (H_1)_nu -> sum over monomials m of degree s of (H_1)_{nu+s}, as a
// subspace of (Z_1)_nu, returned by dimension.
std::size_t torsion_kernel_dim(const ParamSystem& sys, const std::vector<Vec>& zb, int nu, int s) {
  const std::size_t n = sys.n(), m = sys.nforms();
  const int d = sys.d(), t = nu + s;
  std::vector<Vec> pi = left_kernel(koszul_matrix(sys, 2, t));
  if (pi.empty()) return zb.size();
  auto src = monomial_basis(n, nu - d);
  MonomialIndex dst(monomial_basis(n, t - d));
  auto shifts = monomial_basis(n, s);
  const Field& f = sys.field();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> zs(zb.size());
  for (std::size_t j = 0; j < zb.size(); ++j)
    for (std::size_t k = 0; k < zb[j].size(); ++k)
      if (!zb[j][k].is_zero()) zs[j].emplace_back(k, zb[j][k]);
  ExactMatrix stacked(shifts.size() * pi.size(), zb.size(), f);
  std::size_t row = 0;
  for (const auto& mono : shifts) {
    // image index of each K_1(nu) coordinate under multiplication by mono
    std::vector<std::size_t> target(m * src.size());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < src.size(); ++a)
        target[i * src.size() + a] = i * dst.size() + dst.at(src[a] * mono);
    for (const auto& p : pi) {
      for (std::size_t j = 0; j < zb.size(); ++j) {
        Scalar acc = f.zero();
        for (const auto& [k, c] : zs[j])
          if (!p[target[k]].is_zero()) acc += p[target[k]] * c;
        stacked.at(row, j) = acc;
      }
      ++row;
    }
  }
  return zb.size() - rank(stacked);
}

std::size_t torsion_h1(const ParamSystem& sys, int nu, std::size_t dim_b1) {
  const int n = static_cast<int>(sys.n()), d = sys.d();
  std::vector<Vec> zb = kernel_basis(koszul_matrix(sys, 1, nu).dense());
  if (zb.size() == dim_b1) return 0;
  const int cap = n * (d - 1) + d + 2;
  int s = std::max(1, (n + 1) * d - n - nu + 1);
  std::size_t prev = torsion_kernel_dim(sys, zb, nu, s);
  for (++s; s <= cap + 1; ++s) {
    std::size_t next = torsion_kernel_dim(sys, zb, nu, s);
    if (next == prev) return prev - dim_b1;
    prev = next;
  }
  throw StabilizationError("m-torsion of H_1 in degree " + std::to_string(nu) + " did not stabilize by s = " +
                           std::to_string(cap));
}

std::uint64_t fallback_prime(std::uint64_t below) {
  std::uint64_t q = below - 2;
  while (!is_prime_u64(q)) q -= 2;
  return q;
}

}  // namespace

KoszulLab::KoszulLab(const ParamSystem& sys, LabOptions opts) : sys_(sys), opts_(opts), work_(&sys) {
  if (is_rational_field(sys) && !opts.exact) {
    std::uint64_t p = opts.prime;
    for (int attempt = 0; attempt < 4; ++attempt) {
      try {
        owned_ = std::make_unique<ParamSystem>(sys.reduced(p));
        break;
      } catch (const ValidationError&) {
        p = fallback_prime(p);
      }
    }
    if (!owned_) throw ValidationError("no usable reduction prime found");
    work_ = owned_.get();
  }
}

int KoszulLab::window_top() const {
  const int n = static_cast<int>(this->n()), d = this->d();
  return (n + 1) * d - n + d;
}

std::size_t KoszulLab::dim_K(int i, int nu) const {
  if (i < 0 || static_cast<std::size_t>(i) > sys_.nforms()) return 0;
  return static_cast<std::size_t>(binomial(static_cast<long>(sys_.nforms()), i).get_ui()) * dim_R(nu - i * d());
}

std::size_t KoszulLab::rank_d(int i, int nu) {
  if (i < 1 || static_cast<std::size_t>(i) > sys_.nforms()) return 0;
  if (dim_K(i, nu) == 0 || dim_K(i - 1, nu) == 0) return 0;
  auto key = std::make_pair(i, nu);
  auto it = ranks_.find(key);
  if (it != ranks_.end()) return it->second;
  std::size_t r = rank(koszul_matrix(*work_, i, nu));
  ranks_[key] = r;
  return r;
}

KoszulSlice KoszulLab::slice(int i, int nu) {
  KoszulSlice s;
  s.i = i;
  s.nu = nu;
  s.dim_K = dim_K(i, nu);
  s.dim_Z = s.dim_K - rank_d(i, nu);
  s.dim_B = rank_d(i + 1, nu);
  if (s.dim_B > s.dim_Z) throw std::logic_error("boundaries exceed cycles");
  s.dim_H = s.dim_Z - s.dim_B;
  return s;
}

std::size_t KoszulLab::hilbert(int nu) {
  if (nu < 0) return 0;
  return dim_R(nu) - rank_d(1, nu);
}

bool KoszulLab::mprimary() {
  if (!mprimary_) {
    const int n = static_cast<int>(this->n()), d = this->d();
    mprimary_ = false;
    for (int nu = 0; nu <= (n + 1) * (d - 1) + 1; ++nu)
      if (hilbert(nu) == 0) {
        mprimary_ = true;
        break;
      }
  }
  return *mprimary_;
}

std::size_t KoszulLab::sat_codim(int nu) {
  if (nu < 0) return 0;
  if (mprimary()) return 0;
  auto it = sat_.find(nu);
  if (it != sat_.end()) return it->second;
  std::size_t c = dim_R(nu) - sat_basis(*work_, nu).size();
  sat_[nu] = c;
  return c;
}

std::size_t KoszulLab::h0m_h1(int nu) {
  if (mprimary()) return slice(1, nu).dim_H;
  auto it = tors_.find(nu);
  if (it != tors_.end()) return it->second;
  std::size_t v = 0;
  if (nu > d()) v = torsion_h1(*work_, nu, rank_d(2, nu));
  tors_[nu] = v;
  return v;
}

bool ThresholdReport::all_pass() const {
  for (const auto& c : bound_checks)
    if (!c.pass) return false;
  return true;
}

namespace {
BoundCheck check(std::string name, long lhs, std::string rel, long rhs, std::string note = {}) {
  bool ok = rel == "<=" ? lhs <= rhs : rel == ">=" ? lhs >= rhs : lhs == rhs;
  return BoundCheck{std::move(name), lhs, std::move(rel), rhs, ok, std::move(note)};
}
}  // namespace

const ThresholdReport& KoszulLab::report() {
  if (report_) return *report_;
  ThresholdReport r;
  const int n = static_cast<int>(this->n()), d = this->d();
  const std::size_t m = sys_.nforms();
  r.n = this->n();
  r.d = d;
  r.field = sys_.field().to_string();
  r.rank_field = work_->field().to_string();
  r.window_top = window_top();
  r.mprimary = mprimary();

  // dim R/I <= 1 via Gotzmann persistence
  if (r.mprimary) {
    r.dim_RmodI = 0;
  } else {
    bool certified = false;
    for (int nu = d; nu <= r.window_top + d + 2; ++nu) {
      std::size_t c = hilbert(nu);
      if (c <= static_cast<std::size_t>(nu) && hilbert(nu + 1) == c) {
        certified = true;
        r.base_degree = c;
        break;
      }
    }
    if (!certified) throw ValidationError("dim R/I >= 2 (Hilbert function does not become constant)");
    r.dim_RmodI = 1;
    r.warnings.push_back(
        "local generation hypothesis (at most dim R_p + 1 generators at each prime) is assumed, not verified");
    r.warnings.push_back("Rees kernel is used for J; it agrees with the symmetric-algebra torsion quotient when base points are locally complete intersections");
  }

  for (int nu = 0; nu <= r.window_top; ++nu) {
    r.hilb_RmodI[nu] = hilbert(nu);
    std::vector<std::size_t> hs;
    for (std::size_t i = 0; i <= m; ++i) hs.push_back(slice(static_cast<int>(i), nu).dim_H);
    r.h_dims[nu] = hs;
    if (hs[1] && !r.indeg_H1) r.indeg_H1 = nu;
    if (hs[1]) r.end_H1 = nu;
    if (m > 2 && hs[2] && !r.indeg_H2) r.indeg_H2 = nu;
    if (r.hilb_RmodI[nu]) r.end_RmodI = nu;
  }
  if (!r.indeg_H1) throw HypothesisViolation("H_1 vanishes in the whole degree window");

  for (int nu = 0; nu <= r.window_top; ++nu) {
    std::size_t t = h0m_h1(nu);
    r.h0m_H1[nu] = t;
    if (t && !r.indeg_H0mH1) r.indeg_H0mH1 = nu;
  }

  const int e = (n - 1) * (d - 1);
  if (r.mprimary) {
    r.indeg_Isat = 0;
    for (int nu = 0; nu <= r.window_top; ++nu) r.hilb_RmodIsat[nu] = 0;
    // H^0_m(R/I) = R/I
    r.end_H0m_RmodI = r.end_RmodI;
    r.regularity = r.end_RmodI;
  } else {
    std::optional<int> first_full;
    for (int nu = 0; nu <= r.window_top; ++nu) {
      std::size_t c = sat_codim(nu);
      r.hilb_RmodIsat[nu] = c;
      if (c < dim_R(nu) && !r.indeg_Isat) r.indeg_Isat = nu;
      if (r.hilb_RmodI[nu] > c) r.end_H0m_RmodI = nu;
      if (c == r.base_degree && !first_full) first_full = nu;
    }
    if (!r.indeg_Isat) throw HypothesisViolation("I^sat has no element inside the degree window");
    if (!first_full) throw HypothesisViolation("Hilbert function of R/I^sat does not reach its degree in the window");
    int end_h1m = *first_full - 1;
    r.regularity = std::max(r.end_H0m_RmodI.value_or(std::numeric_limits<int>::min()), end_h1m + 1);
  }

  int min_term = *r.indeg_H1;
  if (r.indeg_H0mH1) min_term = std::min(min_term, *r.indeg_H0mH1 - d);
  r.mu0 = e - min_term;
  r.nu0 = e - *r.indeg_Isat;

  // identities and bounds
  bool euler_ok = true, high_ok = true;
  for (int nu = 0; nu <= r.window_top; ++nu) {
    long lhs = 0, rhs = 0;
    for (std::size_t i = 0; i <= m; ++i) {
      long sign = i % 2 ? -1 : 1;
      lhs += sign * static_cast<long>(dim_K(static_cast<int>(i), nu));
      rhs += sign * static_cast<long>(r.h_dims[nu][i]);
      if (i >= 3 && r.h_dims[nu][i] != 0) high_ok = false;
    }
    if (lhs != rhs) euler_ok = false;
  }
  r.bound_checks.push_back(check("euler_characteristic", euler_ok, "==", 1, "alternating sums of K_i and H_i agree in every window degree"));
  r.bound_checks.push_back(check("H_i_vanish_i_ge_3", high_ok, "==", 1, "H_i = 0 for i >= 3 in every window degree"));
  {
    const long inf = std::numeric_limits<int>::max();
    long lhs = r.indeg_H2 ? *r.indeg_H2 : inf;
    r.bound_checks.push_back(check("indeg_H2_ge_indeg_H1_plus_d", lhs, ">=", *r.indeg_H1 + d,
                                   r.indeg_H2 ? "" : "H_2 vanishes in the window"));
  }
  // torsion of H_1 against H^0_m(R/I) in the complementary degree
  {
    bool ok = true;
    const int top = (n + 1) * d - n;
    for (int nu = 0; nu <= r.window_top; ++nu) {
      int dual = top - nu;
      std::size_t other = dual < 0 ? 0 : (r.mprimary ? hilbert(dual) : h0m_RmodI(dual));
      if (r.h0m_H1[nu] != other) ok = false;
    }
    r.bound_checks.push_back(check("torsion_H1_dual_to_torsion_RmodI", ok, "==", 1,
                                   "dim H^0_m(H_1)_nu = dim H^0_m(R/I)_{(n+1)d-n-nu}"));
  }
  if (r.mprimary) {
    r.bound_checks.push_back(check("mu0_lower_general", r.mu0, ">=", e / 2));
    r.bound_checks.push_back(check("mu0_upper", r.mu0, "<=", e));
    r.bound_checks.push_back(check("mu0_eq_end_RmodI_minus_d_plus_1", r.mu0, "==", *r.end_RmodI - d + 1));
    r.bound_checks.push_back(check("mu0_eq_n(d-1)_minus_indeg_H1_plus_1", r.mu0, "==", n * (d - 1) - *r.indeg_H1 + 1));
  } else {
    if (n >= 3 && d >= 2) {
      r.bound_checks.push_back(check("reg_minus_d_le_mu0", *r.regularity - d, "<=", r.mu0));
      r.bound_checks.push_back(check("mu0_le_nu0", r.mu0, "<=", r.nu0));
      r.bound_checks.push_back(check("nu0_le_(n-1)(d-1)", r.nu0, "<=", e));
      r.bound_checks.push_back(check("mu0_lower_dim1", r.mu0, ">=", ((n - 2) * (d - 1) - 1) / 2));
    }
  }
  report_ = std::move(r);
  return *report_;
}

KoszulSlice koszul_dims(const ParamSystem& sys, int i, int nu, LabOptions opts) {
  KoszulLab lab(sys, opts);
  return lab.slice(i, nu);
}

std::size_t hilbert_RmodI(const ParamSystem& sys, int nu, LabOptions opts) {
  KoszulLab lab(sys, opts);
  return lab.hilbert(nu);
}

SaturationSlice saturation_slice(const ParamSystem& sys, int nu) {
  SaturationSlice s;
  s.nu = nu;
  if (nu < 0) return s;
  s.basis = sat_basis(sys, nu);
  s.codim = monomial_count(sys.n(), nu) - s.basis.size();
  return s;
}

std::size_t h0m_H1_dims(const ParamSystem& sys, int nu, LabOptions opts) {
  KoszulLab lab(sys, opts);
  return lab.h0m_h1(nu);
}

ThresholdReport threshold_report(const ParamSystem& sys, LabOptions opts) {
  KoszulLab lab(sys, opts);
  return lab.report();
}

HilbertModel general_forms_hilbert_model(std::size_t n, int d) {
  IntSeries num = series_pow(one_minus_t_pow(static_cast<unsigned>(d)), static_cast<unsigned>(n + 1));
  IntSeries den = series_pow(IntSeries{1, -1}, static_cast<unsigned>(n));
  IntSeries a = poly_series_coeffs(num, den, static_cast<int>((n + 1) * d));
  HilbertModel m;
  int last = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) {
      if (last != static_cast<int>(i) - 1) break;  // positive block must be an initial segment
      last = static_cast<int>(i);
    }
  }
  for (int i = 0; i <= last; ++i) m.h.push_back(a[i].get_ui());
  m.end = static_cast<int>((n + 1) * (d - 1) / 2);
  if (last != m.end) throw HypothesisViolation("Hilbert model end " + std::to_string(last) + " differs from " + std::to_string(m.end));
  return m;
}

}  // namespace mrep

// One line per acceptance criterion: "criterion <k> PASS|FAIL <title> (<checks>, <seconds> s of <budget> s)",
// followed by indented details for every failed check. Exceeding the time budget
// fails the criterion. Exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mrep/appendix.hpp"
#include "mrep/downgrade.hpp"
#include "mrep/errors.hpp"
#include "mrep/implicitize.hpp"
#include "mrep/series.hpp"

namespace {

using namespace mrep;

struct Fixture {
  std::string name;
  std::unique_ptr<ParamSystem> sys;
  std::unique_ptr<KoszulLab> lab;
  bool mprimary = false;
};

// Systems stay at a fixed address because KoszulLab keeps a reference.
Fixture make_fixture(std::string name, ParamSystem sys) {
  Fixture f;
  f.name = std::move(name);
  f.sys = std::make_unique<ParamSystem>(std::move(sys));
  f.lab = std::make_unique<KoszulLab>(*f.sys);
  return f;
}

struct Fixtures {
  Fixture six_points;
  std::vector<Fixture> hb;       // criterion 2
  std::vector<Fixture> general;  // criterion 3
};

const std::vector<std::pair<int, int>> kGeneralGrid = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}};
constexpr int kTrials = 5;

Fixtures& fixtures_store() {
  static Fixtures f = [] {
    Fixtures s;
    s.six_points = make_fixture("six base points", fixtures::six_base_points());
    for (int t = 1; t <= kTrials; ++t)
      s.hb.push_back(make_fixture("HB trial " + std::to_string(t), fixtures::hilbert_burch(static_cast<std::uint64_t>(t))));
    for (auto [n, d] : kGeneralGrid)
      for (int t = 1; t <= kTrials; ++t) {
        std::uint64_t seed = 1000u * static_cast<std::uint64_t>(n) + 100u * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(t);
        s.general.push_back(make_fixture("general n=" + std::to_string(n) + " d=" + std::to_string(d) + " trial " +
                                             std::to_string(t),
                                         fixtures::random_forms(static_cast<std::size_t>(n), d, seed)));
        s.general.back().mprimary = true;
      }
    return s;
  }();
  return f;
}

// Collects failed checks of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++count_;
      failures_.push_back(what + ": exception: " + e.what());
    }
  }
  bool ok() const { return failures_.empty() && count_ > 0; }
  std::size_t count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

std::string str(long v) { return std::to_string(v); }

MultiPoly six_points_equation(const ParamSystem& sys) {
  return parse_poly("T0*T1*T2 + T0*T1*T3 - T2*T3^2", {sys.t_names(), sys.field()});
}

// 1. Six-base-point example.
void criterion1(Checks& c) {
  auto& f = fixtures_store().six_points;
  KoszulLab& lab = *f.lab;
  const auto& r = lab.report();
  c.expect(r.mu0 == 0, "mu0 = " + str(r.mu0) + ", expected 0");
  c.expect(r.nu0 == 2, "nu0 = " + str(r.nu0) + ", expected 2");
  c.expect(r.indeg_H1 == 4, "indeg H1 wrong");
  c.expect(r.indeg_Isat == 2, "indeg I^sat wrong");
  c.expect(r.base_degree == 6, "Hilbert polynomial = " + str(static_cast<long>(r.base_degree)) + ", expected 6");
  for (int nu = 4; nu <= r.window_top + 4; ++nu) c.expect(lab.hilbert(nu) == 6, "dim (R/I)_" + str(nu) + " != 6");
  for (int nu = 0; nu <= r.window_top + 4; ++nu) {
    std::size_t h = lab.h0m_h1(nu);
    c.expect(h == (nu == 7 ? 1u : 0u), "dim H0m(H1)_" + str(nu) + " = " + str(static_cast<long>(h)));
  }
  auto m0 = build_matrix(lab, 0);
  c.expect(m0.nrows() == 1 && m0.ncols() == 1, "M0 is not 1x1");
  auto m1 = build_matrix(lab, 1);
  c.expect(m1.nrows() == 3 && m1.ncols() == 4, "M1 is not 3x4");
  c.expect(m1.count_tdegree(1) == 3 && m1.count_tdegree(2) == 1, "M1 columns are not 3 linear + 1 quadratic");
  auto m2 = build_matrix(lab, 2, 1);
  c.expect(m2.nrows() == 6 && m2.ncols() == 9, "M2 (lmax 1) is not 6x9");
  const MultiPoly h = six_points_equation(*f.sys);
  for (int mu : {0, 1, 2}) {
    auto imp = implicitize(lab, mu);
    c.expect(associates(imp.equation, h), "mu=" + str(mu) + ": equation " + print_poly(imp.equation, f.sys->t_names()));
    c.expect(imp.verified(), "mu=" + str(mu) + ": verify_implicit failed");
  }
  c.expect(associates(gcd_minors(m2), h), "gcd of maximal minors of M2 (lmax 1) is not the equation");
  c.expect(verify_implicit(h, *f.sys).vanishes, "verify_implicit fails on the stated equation");
}

// 2. Hilbert-Burch cubics.
void criterion2(Checks& c) {
  for (auto& f : fixtures_store().hb) {
    c.guarded(f.name, [&] {
      KoszulLab& lab = *f.lab;
      const auto& r = lab.report();
      c.expect(r.mu0 == 0, f.name + ": mu0 = " + str(r.mu0));
      c.expect(r.nu0 == 1, f.name + ": nu0 = " + str(r.nu0));
      for (int nu = 0; nu <= r.window_top + 3; ++nu)
        c.expect(lab.h0m_h1(nu) == 0, f.name + ": H0m(H1)_" + str(nu) + " != 0");
      for (int mu = 0; mu <= 2; ++mu)
        c.expect(new_columns(lab, mu, 2).count == 0, f.name + ": quadratic columns at mu=" + str(mu));
      auto imp = implicitize(lab, 0);
      c.expect(imp.degree == 3, f.name + ": equation degree " + str(imp.degree));
      c.expect(imp.verified(), f.name + ": equation not verified");
    });
  }
}

// 3. Threshold bounds for general forms.
void criterion3(Checks& c) {
  for (auto& f : fixtures_store().general) {
    c.guarded(f.name, [&] {
      const auto n = static_cast<int>(f.sys->n());
      const int d = f.sys->d();
      const auto& r = f.lab->report();
      c.expect(r.mprimary, f.name + ": not m-primary");
      c.expect(r.mu0 == (n - 1) * (d - 1) / 2, f.name + ": mu0 = " + str(r.mu0));
      c.expect(r.end_RmodI == (n + 1) * (d - 1) / 2, f.name + ": end(R/I) wrong");
      auto model = general_forms_hilbert_model(f.sys->n(), d);
      for (int nu = 0; nu <= r.window_top; ++nu) {
        std::size_t want = nu < static_cast<int>(model.h.size()) ? model.h[nu] : 0;
        c.expect(f.lab->hilbert(nu) == want, f.name + ": h(" + str(nu) + ") differs from the model");
      }
    });
  }
}

std::vector<Fixture*> fixtures_1_to_3() {
  auto& s = fixtures_store();
  std::vector<Fixture*> out{&s.six_points};
  for (auto& f : s.hb) out.push_back(&f);
  for (auto& f : s.general) out.push_back(&f);
  return out;
}

// 4. New-column rank formula.
void criterion4(Checks& c) {
  for (Fixture* f : fixtures_1_to_3()) {
    c.guarded(f->name, [&] {
      KoszulLab& lab = *f->lab;
      const int n = static_cast<int>(f->sys->n()), d = f->sys->d();
      const int mu0 = lab.mu0();
      for (int mu = mu0; mu <= mu0 + 2; ++mu)
        for (int ell = 2; ell <= n; ++ell) {
          std::size_t want = lab.h0m_h1(mu + ell * d);
          if (ell >= 3) want += lab.sat_codim((n + 1 - ell) * d - n - mu);
          auto q = new_columns(lab, mu, ell, false);
          c.expect(q.count == want && q.reps.size() == want,
                   f->name + ": mu=" + str(mu) + " l=" + str(ell) + " count " + str(static_cast<long>(q.count)) +
                       ", formula " + str(static_cast<long>(want)));
        }
    });
  }
}

// 5. Resolution ranks.
void criterion5(Checks& c) {
  for (auto& f : fixtures_store().general) {
    c.guarded(f.name, [&] {
      KoszulLab& lab = *f.lab;
      for (int mu = lab.mu0(); mu <= lab.mu0() + 1; ++mu) {
        auto r = resolution_ranks(lab, mu);
        c.expect(r.consistent(), f.name + ": formula and direct ranks differ at mu=" + str(mu));
      }
    });
  }
  for (auto& f : fixtures_store().general) {
    if (f.sys->n() != 3 || f.sys->d() != 2) continue;
    c.guarded(f.name + " (n=3, d=2, mu=1)", [&] {
      KoszulLab& lab = *f.lab;
      auto r = resolution_ranks(lab, 1);
      c.expect(r.b.at(1) == 0, f.name + ": b1 = " + str(r.b.at(1)));
      c.expect(r.beta.at(1) == 2, f.name + ": beta1 wrong");
      c.expect(r.beta.at(2) == 1, f.name + ": beta2 wrong");
      auto m = build_matrix(lab, 1);
      c.expect(m.nrows() == 3 && m.ncols() == 3, f.name + ": M1 is not 3x3");
      auto det = det_square(m);
      c.expect(det.degree() == 4, f.name + ": determinant degree " + str(det.degree()));
      c.expect(verify_implicit(det, *f.sys).vanishes, f.name + ": determinant does not vanish on f");
    });
  }
}

// 6. Downgrading.
void criterion6(Checks& c) {
  for (auto& f : fixtures_store().general) {
    c.guarded(f.name, [&] {
      KoszulLab& lab = *f.lab;
      const ParamSystem& sys = *f.sys;
      const int mu0 = lab.mu0();
      for (int mu = 0; mu <= mu0 + 2; ++mu) {
        auto v = lambda_check(lab, mu, 2, false);
        c.expect(v.injective, f.name + ": lambda_2 not injective at mu=" + str(mu));
        if (mu >= mu0) c.expect(v.bijective, f.name + ": lambda_2 not bijective at mu=" + str(mu));
        auto q = new_columns(lab, mu, 2, false);
        if (q.reps.empty()) continue;
        auto basis = bidegree_basis(sys, mu, 2);
        EchelonSpan low(basis.size(), sys.field());
        for (const auto& w : lower_order_slice(sys, mu, 2)) low.add(w);
        for (const auto& rep : q.reps) {
          auto back = upgrade(lab, mu, downgrade_once(rep, sys));
          c.expect(low.contains(basis.coords(back - rep)), f.name + ": round trip fails at mu=" + str(mu));
        }
      }
    });
  }
}

// 7. Stability of the gcd of maximal minors at mu0 and mu0 + 1.
void criterion7(Checks& c) {
  for (Fixture* f : fixtures_1_to_3()) {
    c.guarded(f->name, [&] {
      KoszulLab& lab = *f->lab;
      const int mu0 = lab.mu0();
      auto a = gcd_minors(build_matrix(lab, mu0));
      auto b = gcd_minors(build_matrix(lab, mu0 + 1));
      c.expect(associates(a, b), f->name + ": gcds at mu0 and mu0+1 differ (degrees " + str(a.degree()) + ", " +
                                     str(b.degree()) + ")");
    });
  }
}

// 8. Appendix grids.
void criterion8(Checks& c) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (const auto& p : lefschetz_grid(n, m))
        c.expect(p.pass, "lefschetz n=" + str(static_cast<long>(n)) + " m=" + str(m) + " " + p.label);
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned d = 2; d <= 6; ++d) c.expect(sign_pattern(n, d, false).holds(), "signs n=" + str(n) + " d=" + str(d));
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned t = 1; t <= 5; ++t)
      for (unsigned j = 1; j <= std::min(m, t); ++j)
        c.expect(annihilation_check(m, t, j, false).annihilated,
                 "annihilation m=" + str(m) + " t=" + str(t) + " j=" + str(j));
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned t = 0; t <= 3; ++t)
      for (unsigned N = 1; N <= 4; ++N)
        c.expect(kernel_structure_check(m, t, N, false).holds(),
                 "kernel m=" + str(m) + " t=" + str(t) + " N=" + str(N));
}

// 9. Rank condition for three variables.
void criterion9(Checks& c) {
  for (auto& f : fixtures_store().general) {
    if (f.sys->n() != 3) continue;
    c.guarded(f.name, [&] {
      const int d = f.sys->d();
      auto r = cgz_condition(*f.lab);
      c.expect(r.dim_Z1 == static_cast<std::size_t>(d), f.name + ": dim Z1 = " + str(static_cast<long>(r.dim_Z1)));
      c.expect(r.mu0 == d - 1, f.name + ": mu0 = " + str(r.mu0));
      c.expect(r.square, f.name + ": M_mu0 is not square");
    });
  }
}

MultiPoly random_poly(std::size_t n, int maxdeg, std::mt19937_64& rng, const Field& f) {
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<Term> terms;
  for (int d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomial_basis(n, d))
      if (rng() % 3 == 0) terms.emplace_back(m, f.from_int(coef(rng)));
  return MultiPoly::from_terms(n, f, std::move(terms));
}

MultiPoly random_form(std::size_t n, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-6, 6);
  std::vector<Term> terms;
  for (const auto& m : monomial_basis(n, deg)) terms.emplace_back(m, Scalar(coef(rng)));
  return MultiPoly::from_terms(n, Field::rationals(), std::move(terms));
}

// 10. Property suites.
void criterion10(Checks& c) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial)
    for (Field f : {Field::rationals(), Field::prime(101)}) {
      auto a = random_poly(3, 3, rng, f), b = random_poly(3, 3, rng, f), d = random_poly(3, 2, rng, f);
      c.expect(a + b == b + a && a * b == b * a, "commutativity");
      c.expect((a * b) * d == a * (b * d), "associativity");
      c.expect(a * (b + d) == a * b + a * d, "distributivity");
      c.expect((a - a).is_zero(), "additive inverse");
    }
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = 2 + rng() % 8, cols = 2 + rng() % 8;
    ExactMatrix m(r, cols, Field::rationals());
    std::uniform_int_distribution<long> e(-3, 3);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(rng() % 3 == 0 ? 0L : e(rng));
    c.expect(rank(m) + kernel_basis(m).size() == cols, "rank-nullity");
  }
  int gcd_runs = 0;
  for (int trial = 0; gcd_runs < 8 && trial < 40; ++trial) {
    auto g = random_form(3, 2, rng), a = random_form(3, 2, rng), b = random_form(3, 1, rng);
    if (g.is_zero() || a.is_zero() || b.is_zero() || poly_gcd(a, b).degree() > 0) continue;
    ++gcd_runs;
    c.expect(associates(poly_gcd(a * g, b * g), g), "gcd self-test (exact)");
    c.expect(associates(modular_gcd({a * g, b * g}), g), "gcd self-test (modular)");
  }
  c.expect(gcd_runs == 8, "gcd self-test could not draw coprime cofactors");
  for (Fixture* f : fixtures_1_to_3()) {
    c.guarded(f->name, [&] {
      KoszulLab& lab = *f->lab;
      const auto& r = lab.report();
      for (const auto& [nu, hs] : r.h_dims) {
        long chi_h = 0, chi_k = 0;
        for (std::size_t i = 0; i < hs.size(); ++i) {
          long sign = i % 2 ? -1 : 1;
          chi_h += sign * static_cast<long>(hs[i]);
          chi_k += sign * static_cast<long>(lab.dim_K(static_cast<int>(i), nu));
        }
        c.expect(chi_h == chi_k, f->name + ": Euler characteristic at " + str(nu));
      }
      if (r.indeg_H1 && r.indeg_H2)
        c.expect(*r.indeg_H2 >= *r.indeg_H1 + f->sys->d(), f->name + ": indeg H2 < indeg H1 + d");
      for (const auto& b : r.bound_checks) c.expect(b.pass, f->name + ": bound check " + b.name);
    });
  }
}

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds
  std::function<void(Checks&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "six-base-point example regression", 5, criterion1},
      {2, "Hilbert-Burch example regression (5 trials)", 10, criterion2},
      {3, "threshold bounds for general forms", 60, criterion3},
      {4, "new-column rank formula", 60, criterion4},
      {5, "resolution ranks", 30, criterion5},
      {6, "downgrading isomorphisms and round trip", 30, criterion6},
      {7, "gcd of maximal minors stable from mu0 to mu0+1", 30, criterion7},
      {8, "appendix grids", 60, criterion8},
      {9, "rank condition for three variables", 30, criterion9},
      {10, "property suites", 60, criterion10},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  bool all_ok = true;
  for (auto& cr : all) {
    if (!only.empty() && !only.count(cr.id)) continue;
    Checks checks;
    auto t0 = std::chrono::steady_clock::now();
    checks.guarded("criterion " + std::to_string(cr.id), [&] { cr.run(checks); });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", secs);
    const bool in_time = secs <= cr.budget;
    const bool ok = checks.ok() && in_time;
    std::cout << "criterion " << cr.id << " " << (ok ? "PASS" : "FAIL") << " " << cr.title << " (" << checks.count()
              << " checks, " << buf << " s of " << cr.budget << " s)" << std::endl;
    for (const auto& f : checks.failures()) std::cout << "    " << f << "\n";
    if (!in_time) std::cout << "    time budget exceeded\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mrep/linalg.hpp"
#include "mrep/modular.hpp"
#include "mrep/param_system.hpp"

namespace mrep {

struct LabOptions {
  // Compute dimensions over Q itself instead of over the reduction mod `prime`.
  bool exact = false;
  std::uint64_t prime = kMersenne61;
};

struct KoszulSlice {
  int i = 0;
  int nu = 0;
  std::size_t dim_K = 0, dim_Z = 0, dim_B = 0, dim_H = 0;
};

struct BoundCheck {
  std::string name;
  long lhs = 0;
  std::string relation;  // "<=", "==", ">="
  long rhs = 0;
  bool pass = false;
  std::string note;
};

struct ThresholdReport {
  std::size_t n = 0;
  int d = 0;
  std::string field;
  std::string rank_field;
  int window_top = 0;
  std::map<int, std::size_t> hilb_RmodI;
  std::map<int, std::size_t> hilb_RmodIsat;
  std::map<int, std::vector<std::size_t>> h_dims;  // degree -> dim H_0..H_{n+1}
  std::map<int, std::size_t> h0m_H1;
  std::optional<int> indeg_H1, end_H1, indeg_H2, indeg_H0mH1, indeg_Isat, end_H0m_RmodI, end_RmodI;
  int mu0 = 0;
  int nu0 = 0;
  std::optional<int> regularity;  // of R/I
  int dim_RmodI = 0;
  bool mprimary = false;
  std::size_t base_degree = 0;  // constant value of the Hilbert polynomial
  std::vector<BoundCheck> bound_checks;
  std::vector<std::string> warnings;

  bool all_pass() const;
};

// Binary subsets of {0..m-1} of a given size, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k);

// Degree-wise Koszul complex of a system, with memoized ranks. Dimensions are
// computed on work(): the system itself, or its reduction mod a large prime.
class KoszulLab {
 public:
  explicit KoszulLab(const ParamSystem& sys, LabOptions opts = {});

  const ParamSystem& system() const { return sys_; }
  const ParamSystem& work() const { return *work_; }
  std::size_t n() const { return sys_.n(); }
  int d() const { return sys_.d(); }
  int window_top() const;

  std::size_t dim_R(int nu) const { return monomial_count(n(), nu); }
  std::size_t dim_K(int i, int nu) const;
  std::size_t rank_d(int i, int nu);  // d_i : K_i -> K_{i-1}
  KoszulSlice slice(int i, int nu);
  std::size_t hilbert(int nu);            // dim (R/I)_nu
  std::size_t sat_codim(int nu);          // dim (R/I^sat)_nu
  std::size_t h0m_h1(int nu);             // dim H^0_m(H_1)_nu
  std::size_t h0m_RmodI(int nu) { return hilbert(nu) - sat_codim(nu); }
  bool mprimary();
  const ThresholdReport& report();
  int mu0() { return report().mu0; }
  int nu0() { return report().nu0; }

 private:
  const ParamSystem& sys_;
  LabOptions opts_;
  std::unique_ptr<ParamSystem> owned_;
  const ParamSystem* work_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
  std::map<int, std::size_t> sat_, tors_;
  std::optional<bool> mprimary_;
  std::optional<ThresholdReport> report_;
};

// Matrix of d_i in degree nu: columns indexed by (subset, monomial of degree
// nu - i d), rows likewise for i-1.
SparseColumns koszul_matrix(const ParamSystem& sys, int i, int nu);

KoszulSlice koszul_dims(const ParamSystem& sys, int i, int nu, LabOptions opts = {});
std::size_t hilbert_RmodI(const ParamSystem& sys, int nu, LabOptions opts = {});

struct SaturationSlice {
  int nu = 0;
  std::vector<Vec> basis;      // of (I^sat)_nu in monomial coordinates
  std::size_t codim = 0;       // dim (R/I^sat)_nu
};
// Exact over the field of `sys`.
SaturationSlice saturation_slice(const ParamSystem& sys, int nu);
std::size_t h0m_H1_dims(const ParamSystem& sys, int nu, LabOptions opts = {});
ThresholdReport threshold_report(const ParamSystem& sys, LabOptions opts = {});

struct HilbertModel {
  std::vector<std::size_t> h;
  int end = 0;
};
HilbertModel general_forms_hilbert_model(std::size_t n, int d);

}  // namespace mrep

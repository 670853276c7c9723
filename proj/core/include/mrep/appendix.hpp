#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mrep/monomial.hpp"
#include "mrep/poly.hpp"
#include "mrep/series.hpp"

namespace mrep {

// Q[x_1..x_n]/(x_1^m, ..., x_n^m) with its monomial basis.
class CubeAlgebra {
 public:
  CubeAlgebra(std::size_t n, unsigned m);
  std::size_t n() const { return n_; }
  unsigned m() const { return m_; }
  int top() const { return static_cast<int>(n_ * (m_ - 1)); }
  std::vector<Monomial> basis(int k) const;  // empty outside 0..top
  std::size_t dim(int k) const { return basis(k).size(); }
  // Coefficient of t^k in ((1 - t^m)/(1 - t))^n.
  mpz_class model_dim(int k) const;

 private:
  std::size_t n_;
  unsigned m_;
};

struct LefschetzVerdict {
  std::size_t n = 0;
  unsigned m = 0;
  int k = 0;
  unsigned t = 0;
  std::size_t source_dim = 0, target_dim = 0, rank = 0;
  bool injective = false, surjective = false;
  bool expected_inj = false, expected_surj = false;  // 2k+t <= top, 2k+t >= top
  bool holds() const { return (!expected_inj || injective) && (!expected_surj || surjective); }
};

// Multiplication by (x_1 + ... + x_n)^t from degree k to k + t. With `strict`, a
// flag predicted by the inequalities but not observed throws TheoremViolation.
LefschetzVerdict lefschetz_check(std::size_t n, unsigned m, int k, unsigned t, bool strict = true);

struct SignVerdict {
  unsigned n = 0, d = 0;
  IntSeries c;  // (1 - t^d)^n / (1 - t)^(n-1)
  bool positive_head = false;  // c_i > 0 for i <= floor(n(d-1)/2)
  bool negative_tail = false;  // c_i < 0 for ceil(n(d-1)/2 + 1) <= i <= n(d-1)+1
  bool middle_zero = false;    // c at (n(d-1)+1)/2 vanishes; true when n(d-1)+1 is odd
  bool holds() const { return positive_head && negative_tail && middle_zero; }
};

SignVerdict sign_pattern(unsigned n, unsigned d, bool strict = true);

// P_j in Q[x, a] (variables x, a), the polynomial part of
// (d/dx)^(t-j) (x^(m+t-j) / (x+a)^j):
// sum_{i=0}^{m-j} (m+t-2j-i)! (j+i-1)! / ((m-j-i)! (j-1)! i!) (-a)^i x^(m-j-i).
MultiPoly oesterle_Pj(unsigned m, unsigned t, unsigned j);

struct AnnihilationVerdict {
  unsigned m = 0, t = 0, j = 0;
  unsigned a_order = 0;  // m + t + 1 - 2j
  bool annihilated = false;
};

// (x + a)^t P_j = 0 in Q[x, a]/(x^m, a^(m+t+1-2j)).
AnnihilationVerdict annihilation_check(unsigned m, unsigned t, unsigned j, bool strict = true);

struct KernelVerdict {
  unsigned m = 0, t = 0, N = 0;
  std::size_t observed = 0;   // kernel dimension over Q of (x + a)^t on A[x]/x^m, A = Q[a]/a^N
  std::size_t predicted = 0;  // sum over j of dim{b in A : a^(m+t+1-2j) b = 0}
  std::size_t span_dim = 0;   // dimension of the span of the admissible b_j P_j
  bool span_in_kernel = false;
  bool holds() const { return observed == predicted && span_dim == predicted && span_in_kernel; }
};

KernelVerdict kernel_structure_check(unsigned m, unsigned t, unsigned N, bool strict = true);

// One row per grid point, for tables.
struct GridPoint {
  std::string label;
  bool pass = false;
  std::string detail;
};

// 0 <= k <= n(m-1), 0 <= t <= n(m-1)+1.
std::vector<GridPoint> lefschetz_grid(std::size_t n, unsigned m);
// annihilation_check for every admissible j, kernel_structure_check for 1 <= N <= Nmax.
std::vector<GridPoint> lemme_grid(unsigned m, unsigned t, unsigned Nmax);

}  // namespace mrep

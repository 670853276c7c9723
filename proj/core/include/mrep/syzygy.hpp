#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrep/bigraded.hpp"
#include "mrep/koszul.hpp"

namespace mrep {

// Coordinates of elements of S_{mu,l} always refer to BidegreeBasis(n, n+1, mu, l).
BidegreeBasis bidegree_basis(const ParamSystem& sys, int mu, int ell);

struct SyzygyVector {
  Vec coords;                  // in S_{mu,1}
  std::vector<MultiPoly> a;    // a_0..a_n of degree mu
  bool koszul = false;
};

struct SyzygyBasis {
  int mu = 0;
  std::size_t koszul_dim = 0;
  // Koszul vectors first (a basis of the Koszul part), then non-Koszul representatives.
  std::vector<SyzygyVector> vectors;
};

// Syzygies (a_i) of coefficient degree mu, exact over the field of sys.
SyzygyBasis linear_syzygies(const ParamSystem& sys, int mu);

// Basis of {P in S_{mu,l} : P(X, f) = 0}.
std::vector<Vec> algebra_equations(const ParamSystem& sys, int mu, int ell);

// Spanning set of KS in bidegree (mu, l): multiples of f_i T_j - f_j T_i.
std::vector<Vec> koszul_span(const ParamSystem& sys, int mu, int ell);

// Spanning set of the part of J generated in T-degree < l, in bidegree (mu, l).
std::vector<Vec> lower_order_slice(const ParamSystem& sys, int mu, int ell);

// dim (J<l>/J<l-1>)_{mu,l} from ranks only.
std::size_t new_column_count(const ParamSystem& sys, int mu, int ell);

// Rank predicted by the threshold-degree formula.
std::size_t predicted_new_columns(KoszulLab& lab, int mu, int ell);

struct SliceQuotient {
  int mu = 0, ell = 0;
  std::vector<Vec> coords;
  std::vector<BigradedPoly> reps;
  std::size_t count = 0;           // dim of the quotient
  std::size_t predicted_rank = 0;
  bool guaranteed = false;         // mu >= mu0
};

// Representatives of (J<l>/J<l-1>)_{mu,l}. Throws HypothesisViolation when the
// count differs from the prediction at mu >= mu0 and `strict` is set.
SliceQuotient new_columns(KoszulLab& lab, int mu, int ell, bool strict = true);

struct MatrixColumn {
  int tdegree = 1;
  std::vector<MultiPoly> entries;  // one T-polynomial per row
};

struct MatrixRep {
  int mu = 0;
  std::vector<Monomial> rows;
  std::vector<MatrixColumn> columns;
  std::vector<std::string> x_names, t_names;
  Field field;
  std::map<int, std::size_t> predicted;  // per T-degree
  std::map<int, std::size_t> actual;
  std::vector<std::string> warnings;

  std::size_t nrows() const { return rows.size(); }
  std::size_t ncols() const { return columns.size(); }
  std::size_t count_tdegree(int ell) const;
};

MatrixRep build_matrix(KoszulLab& lab, int mu, std::optional<int> lmax = std::nullopt);
MatrixRep build_matrix(const ParamSystem& sys, int mu, std::optional<int> lmax = std::nullopt, LabOptions opts = {});

// Sum over rows of row monomial times entry, with T_i replaced by f_i, is 0 for every column.
bool columns_are_equations(const MatrixRep& m, const ParamSystem& sys);

std::string matrix_text(const MatrixRep& m);

struct ResolutionRanks {
  int mu = 0;
  std::map<int, long> b, b_direct;                  // i = 1..n+1
  std::map<int, std::size_t> beta, beta_direct;     // l = 1..n
  bool consistent() const { return b == b_direct && beta == beta_direct; }
};

// Throws HypothesisViolation naming the first failing index on a mismatch.
ResolutionRanks resolution_ranks(KoszulLab& lab, int mu);
long resolution_b_formula(std::size_t n, int d, int mu, int i);

int tuned_mu(KoszulLab& lab, int l);

struct CgzReport {
  std::size_t dim_Z1 = 0;
  bool condition = false;
  int mu0 = 0;
  bool mu0_ok = false;
  std::size_t rows = 0, cols = 0;
  bool square = false;
};
CgzReport cgz_condition(KoszulLab& lab);

}  // namespace mrep

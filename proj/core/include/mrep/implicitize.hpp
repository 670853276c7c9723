#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrep/syzygy.hpp"

namespace mrep {

// a / b when b divides a exactly, otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Over Q: integer coefficients with gcd 1 and positive leading coefficient.
// Over GF(p): monic.
MultiPoly normalize_primitive(const MultiPoly& p);
bool associates(const MultiPoly& a, const MultiPoly& b);

// Normalized gcd by recursive content / primitive part and subresultant remainders.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Fraction-free determinant over the polynomial ring (not normalized).
MultiPoly det_bareiss(std::vector<std::vector<MultiPoly>> m);
// Normalized determinant; throws ValidationError when not square and
// HypothesisViolation when the determinant vanishes.
MultiPoly det_square(const MatrixRep& m);

enum class GcdMethod { automatic, exact, modular };

struct MinorsGcd {
  MultiPoly g;
  std::vector<std::vector<std::size_t>> subsets;  // nonzero minors used
  std::size_t scanned = 0;
  std::string method;
  std::size_t primes = 0;
};

// The columns are first mixed by seeded invertible operations inside each block of
// equal T-degree, which keeps the gcd of maximal minors. Column subsets of the mixed
// matrix are then visited along the colex ranking with a fixed stride; zero minors
// are skipped and the scan stops once at least 3 nonzero minors are in and the last
// one left the gcd unchanged. `subsets` refers to the mixed matrix.
MinorsGcd gcd_minors_detail(const MatrixRep& m, std::size_t sample_budget = 64, GcdMethod method = GcdMethod::automatic);
MultiPoly gcd_minors(const MatrixRep& m, std::size_t sample_budget = 64);

// Gcd of homogeneous polynomials over Q by evaluation on random lines modulo
// several primes and rational reconstruction.
MultiPoly modular_gcd(const std::vector<MultiPoly>& polys);

struct ImplicitVerdict {
  bool vanishes = false;
  int residual_degree = -1;   // degree of H(f) when it does not vanish
  bool primitive = false;
  bool repeated_factor = false;                 // gcd(H, dH/dT_i) is not constant
  std::optional<MultiPoly> vanishing_factor;    // proper factor that already vanishes on f
};
ImplicitVerdict verify_implicit(const MultiPoly& h, const ParamSystem& sys);

struct Implicitization {
  int mu = 0;
  std::size_t rows = 0, cols = 0;
  MultiPoly equation;
  int degree = 0;
  std::string method;
  ImplicitVerdict verdict;
  bool verified() const { return verdict.vanishes; }
};
Implicitization implicitize(KoszulLab& lab, int mu, std::optional<int> lmax = std::nullopt);

}  // namespace mrep

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mrep/field.hpp"

namespace mrep {

using Vec = std::vector<Scalar>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Field field);
  static ExactMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows, Field field);
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols, Field field);
  static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  ExactMatrix transpose() const;
  Vec apply(const Vec& x) const;
  bool operator==(const ExactMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
// Right null space; each vector scaled so its first nonzero entry is 1.
std::vector<Vec> kernel_basis(const ExactMatrix& m);
std::optional<Vec> solve(const ExactMatrix& a, const Vec& b);
// Vectors among `u` whose classes form a basis of span(u)/span(w).
// Throws std::invalid_argument if span(w) is not inside span(u).
std::vector<Vec> quotient_reps(const std::vector<Vec>& u, const std::vector<Vec>& w, std::size_t dim, Field field);
std::size_t span_dimension(const std::vector<Vec>& vs, std::size_t dim, Field field);

// Incrementally built reduced basis of a subspace; used for membership tests and
// for reading off coordinates.
class EchelonSpan {
 public:
  EchelonSpan(std::size_t dim, Field field) : dim_(dim), field_(field) {}
  // Returns true if v was independent of the current span (and adds it).
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dimension() const { return field_.is_rational() ? zrows_.size() : rows_.size(); }
  std::size_t ambient() const { return dim_; }
  // Reduce v against the span, returning the remainder.
  Vec reduce(Vec v) const;

 private:
  std::size_t dim_;
  Field field_;
  std::vector<Vec> rows_;          // pivot entry is 1
  std::vector<std::size_t> piv_;   // pivot column of each row
  // Over Q: primitive integer rows in increasing pivot order, not reduced above
  // their pivots, which keeps entries small.
  std::vector<std::vector<mpz_class>> zrows_;
  std::vector<std::size_t> zpiv_;
  // Multiple of v with integer entries, reduced at every pivot; `scale` is the factor.
  std::vector<mpz_class> zreduce(const Vec& v, mpq_class& scale) const;
};

// Matrix given by sparse columns; only its rank is ever needed.
class SparseColumns {
 public:
  SparseColumns(std::size_t rows, Field field) : rows_(rows), field_(field) {}
  void add_column(std::vector<std::pair<std::size_t, Scalar>> entries);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& columns() const { return cols_; }
  ExactMatrix dense() const;

 private:
  std::size_t rows_;
  Field field_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols_;
};

std::size_t rank(const SparseColumns& m);

}  // namespace mrep

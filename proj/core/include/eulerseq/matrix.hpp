#pragma once

#include <map>
#include <vector>

#include "eulerseq/field.hpp"

namespace eulerseq {

// Dense matrix of field elements.
class ExactMatrix {
 public:
  ExactMatrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  // In-place reduced row echelon form with the fixed pivot rule (columns left
  // to right, first row with a nonzero entry). Returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> col(std::size_t c) const;
  void set_col(std::size_t c, const std::vector<Scalar>& v);

  static ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b);

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Canonical basis of the right kernel {v : m v = 0}, one vector per free
// column of the reduced echelon form. Deterministic given the pivot rule.
std::vector<std::vector<Scalar>> solve_kernel(const ExactMatrix& m);

// Scale so the first nonzero entry is 1, then (over Q) clear denominators to
// a primitive integer vector. Gives reproducible printed bases.
void canonicalize_vector(const Field& f, std::vector<Scalar>& v);

// Incremental row space: rank tracking, membership tests, greedy basis
// extension. Rows are kept reduced against each other.
class Eliminator {
 public:
  Eliminator(const Field& f, std::size_t width) : f_(f), width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  // Inserts v if it enlarges the span; returns whether it did.
  bool add(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  // Fully reduce v against the stored rows: the result vanishes on the pivot
  // columns and is zero iff v lies in the span (quotient coordinates).
  std::vector<Scalar> reduced(std::vector<Scalar> v) const;
  std::vector<std::size_t> pivot_columns() const;

 private:
  // Reduce v against the stored rows; returns the pivot position or width_ if zero.
  std::size_t reduce(std::vector<Scalar>& v) const;
  Field f_;
  std::size_t width_;
  std::map<std::size_t, std::vector<Scalar>> rows_;  // pivot column -> row, pivot = 1
};

}  // namespace eulerseq

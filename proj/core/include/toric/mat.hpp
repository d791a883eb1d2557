#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/rat.hpp"

namespace toric {

// Dense exact matrix, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
  Mat(std::size_t r, std::size_t c, RatVec entries);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;

  Mat transpose() const;
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  Mat select_cols(const std::vector<std::size_t>& idx) const;
  Mat hstack(const Mat& o) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  RatVec apply(const RatVec& x) const;  // this * x

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_, cols_;
  RatVec a_;
};

// Exact determinant by fraction-free (Bareiss) elimination after clearing
// row denominators. Errors on non-square input.
Rat det(const Mat& m);

// Rank via the same fraction-free pipeline with full pivoting.
std::size_t rank(const Mat& m);

// Reduced row echelon form; returns pivot column indices.
Mat rref(const Mat& m, std::vector<std::size_t>& pivot_cols);

// Basis of the right kernel in reduced echelon normal form: the basis
// vectors, stacked as rows, form an RREF matrix (leading entries 1,
// rows ordered by leading position). Empty list for full column rank.
std::vector<RatVec> kernel_basis(const Mat& m);

// Some solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<RatVec> solve(const Mat& m, const RatVec& b);

// Canonicalize the row space of a set of vectors: RREF rows, zero rows dropped.
std::vector<RatVec> echelon_rows(const std::vector<RatVec>& rows);

// Z-basis of {v : A v = 0} for an integer matrix, via unimodular column
// reduction. The result generates the full (saturated) integer kernel.
std::vector<std::vector<mpz_class>> integer_kernel(const std::vector<std::vector<mpz_class>>& a);

}  // namespace toric

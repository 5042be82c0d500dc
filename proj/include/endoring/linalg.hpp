#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "endoring/field.hpp"

namespace endoring {

using DenseVector = std::vector<Coeff>;

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<DenseVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Coeff at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  DenseVector row(std::size_t i) const;
  /// Entries in row-major order.
  const DenseVector& flat() const { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, DenseVector flat);

  bool is_zero() const;
  Coeff trace(const PrimeField& F) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  DenseVector data_;
};

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& F, const Matrix& a, Coeff c);
DenseVector apply(const PrimeField& F, const Matrix& a, const DenseVector& v);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon row_reduce(const PrimeField& F, Matrix a);
std::size_t rank(const PrimeField& F, const Matrix& a);
/// Basis of {x : a·x = 0}.
std::vector<DenseVector> kernel(const PrimeField& F, const Matrix& a);
/// Some x with a·x = b, or nullopt.
std::optional<DenseVector> solve(const PrimeField& F, const Matrix& a, const DenseVector& b);

/// Incremental basis of a subspace of F_p^n with coordinate queries.
class Span {
 public:
  Span(const PrimeField& F, std::size_t dim) : F_(F), dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  /// The vectors as inserted (those that enlarged the span).
  const std::vector<DenseVector>& basis() const { return basis_; }

  /// Adds v if independent; returns true when the span grew.
  bool insert(const DenseVector& v);
  bool contains(const DenseVector& v) const { return !reduce(v).second; }
  /// Coordinates of v over basis(), or nullopt if v is outside the span.
  std::optional<DenseVector> coordinates(const DenseVector& v) const;

 private:
  /// Reduces v by the echelon rows; returns (combination over basis, residual nonzero).
  std::pair<DenseVector, bool> reduce(const DenseVector& v) const;

  PrimeField F_;
  std::size_t dim_;
  std::vector<DenseVector> basis_;
  std::vector<DenseVector> echelon_;  // monic at pivot
  std::vector<DenseVector> combo_;    // echelon_[r] = Σ combo_[r][k] basis_[k]
  std::vector<std::size_t> pivot_;
};

}  // namespace endoring

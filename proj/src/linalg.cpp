#include "endoring/linalg.hpp"

#include <stdexcept>

namespace endoring {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<DenseVector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, DenseVector flat) {
  if (flat.size() != rows * cols) throw std::invalid_argument("flat data has the wrong size");
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(flat);
  return m;
}

DenseVector Matrix::row(std::size_t i) const {
  return DenseVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (Coeff c : data_) {
    if (c) return false;
  }
  return true;
}

Coeff Matrix::trace(const PrimeField& F) const {
  Coeff t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t = F.add(t, at(i, i));
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Coeff aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
    }
  }
  return c;
}

Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimensions do not match");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  }
  return c;
}

Matrix scale(const PrimeField& F, const Matrix& a, Coeff s) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = F.mul(a.at(i, j), s);
  }
  return c;
}

DenseVector apply(const PrimeField& F, const Matrix& a, const DenseVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix and vector dimensions do not match");
  DenseVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = F.add(out[i], F.mul(a.at(i, j), v[j]));
  }
  return out;
}

Echelon row_reduce(const PrimeField& F, Matrix a) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    }
    Coeff inv = F.inv(a.at(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), inv);
    for (std::size_t q = 0; q < a.rows(); ++q) {
      if (q == r) continue;
      Coeff f = a.at(q, c);
      if (!f) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(q, j) = F.sub(a.at(q, j), F.mul(f, a.at(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  std::vector<DenseVector> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(a.row(i));
  e.reduced = Matrix::from_rows(rows, a.cols());
  return e;
}

std::size_t rank(const PrimeField& F, const Matrix& a) { return row_reduce(F, a).pivots.size(); }

std::vector<DenseVector> kernel(const PrimeField& F, const Matrix& a) {
  auto e = row_reduce(F, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<DenseVector> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVector x(a.cols(), 0);
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = F.neg(e.reduced.at(r, f));
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<DenseVector> solve(const PrimeField& F, const Matrix& a, const DenseVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto e = row_reduce(F, aug);
  DenseVector x(a.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced.at(r, a.cols());
  }
  return x;
}

std::pair<DenseVector, bool> Span::reduce(const DenseVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has the wrong dimension");
  DenseVector w = v;
  DenseVector combo(basis_.size(), 0);
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    Coeff f = w[pivot_[r]];
    if (!f) continue;
    for (std::size_t j = 0; j < dim_; ++j) w[j] = F_.sub(w[j], F_.mul(f, echelon_[r][j]));
    for (std::size_t k = 0; k < combo_[r].size(); ++k) combo[k] = F_.add(combo[k], F_.mul(f, combo_[r][k]));
  }
  bool residual = false;
  for (Coeff c : w) residual = residual || c != 0;
  return {residual ? w : combo, residual};
}

bool Span::insert(const DenseVector& v) {
  auto [w, residual] = reduce(v);
  if (!residual) return false;
  // w = v - Σ combo·basis; rebuild the combination for the new echelon row.
  DenseVector w_combo(basis_.size() + 1, 0);
  {
    DenseVector tmp = v;
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      Coeff f = tmp[pivot_[r]];
      if (!f) continue;
      for (std::size_t j = 0; j < dim_; ++j) tmp[j] = F_.sub(tmp[j], F_.mul(f, echelon_[r][j]));
      for (std::size_t k = 0; k < combo_[r].size(); ++k) w_combo[k] = F_.sub(w_combo[k], F_.mul(f, combo_[r][k]));
    }
  }
  w_combo[basis_.size()] = 1;
  std::size_t p = 0;
  while (w[p] == 0) ++p;
  Coeff inv = F_.inv(w[p]);
  for (auto& c : w) c = F_.mul(c, inv);
  for (auto& c : w_combo) c = F_.mul(c, inv);
  for (auto& row : combo_) row.resize(basis_.size() + 1, 0);
  // Keep the echelon rows fully reduced at the new pivot.
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    Coeff f = echelon_[r][p];
    if (!f) continue;
    for (std::size_t j = 0; j < dim_; ++j) echelon_[r][j] = F_.sub(echelon_[r][j], F_.mul(f, w[j]));
    for (std::size_t k = 0; k < w_combo.size(); ++k) combo_[r][k] = F_.sub(combo_[r][k], F_.mul(f, w_combo[k]));
  }
  basis_.push_back(v);
  echelon_.push_back(std::move(w));
  combo_.push_back(std::move(w_combo));
  pivot_.push_back(p);
  return true;
}

std::optional<DenseVector> Span::coordinates(const DenseVector& v) const {
  auto [combo, residual] = reduce(v);
  if (residual) return std::nullopt;
  return combo;
}

}  // namespace endoring

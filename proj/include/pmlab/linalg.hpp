#pragma once

#include <cstddef>
#include <vector>

namespace pmlab {

// Dense square matrix, row-major. Dimensions here are tiny (d <= 50) so we
// keep the storage flat and the algorithms textbook.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim, double fill = 0.0)
      : dim_(dim), data_(dim * dim, fill) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * dim_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  std::vector<double> matvec(const std::vector<double>& x) const;
  double max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
// Throws NotPositiveDefinite if a pivot falls at or below 1e-14, which is how
// degenerate covariance estimates from short preliminary runs surface.
Matrix cholesky_factor(const Matrix& s);

// Symmetric positive definite covariance with a cached Cholesky factor.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries);
  static CovarianceMatrix identity(std::size_t dim) {
    return CovarianceMatrix(Matrix::identity(dim));
  }

  std::size_t dim() const { return entries_.dim(); }
  const Matrix& entries() const { return entries_; }
  const Matrix& chol() const { return chol_; }
  bool is_identity() const { return is_identity_; }

  // solve S x = b via the cached factor
  std::vector<double> solve(const std::vector<double>& b) const;
  double log_det() const;

 private:
  Matrix entries_;
  Matrix chol_;
  bool is_identity_ = false;
};

}  // namespace pmlab

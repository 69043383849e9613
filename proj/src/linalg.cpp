#include "pmlab/linalg.hpp"

#include <cmath>
#include <string>

#include "pmlab/errors.hpp"

namespace pmlab {

std::vector<double> Matrix::matvec(const std::vector<double>& x) const {
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

Matrix cholesky_factor(const Matrix& s) {
  const std::size_t d = s.dim();
  constexpr double kPivotTol = 1e-14;
  Matrix l(d);
  for (std::size_t j = 0; j < d; ++j) {
    double pivot = s(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (pivot <= kPivotTol) {
      throw NotPositiveDefinite("cholesky pivot " + std::to_string(pivot) +
                                " at column " + std::to_string(j));
    }
    l(j, j) = std::sqrt(pivot);
    for (std::size_t i = j + 1; i < d; ++i) {
      double acc = s(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
      l(i, j) = acc / l(j, j);
    }
  }
  return l;
}

CovarianceMatrix::CovarianceMatrix(Matrix entries) : entries_(std::move(entries)) {
  const std::size_t d = entries_.dim();
  constexpr double kSymTol = 1e-12;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (std::fabs(entries_(i, j) - entries_(j, i)) > kSymTol) {
        throw NotPositiveDefinite("covariance matrix not symmetric");
      }
    }
  }
  chol_ = cholesky_factor(entries_);
  is_identity_ = true;
  for (std::size_t i = 0; i < d && is_identity_; ++i) {
    for (std::size_t j = 0; j < d && is_identity_; ++j) {
      if (entries_(i, j) != (i == j ? 1.0 : 0.0)) is_identity_ = false;
    }
  }
}

std::vector<double> CovarianceMatrix::solve(const std::vector<double>& b) const {
  const std::size_t d = dim();
  // forward substitution L y = b
  std::vector<double> y(d);
  for (std::size_t i = 0; i < d; ++i) {
    double acc = b[i];
    for (std::size_t k = 0; k < i; ++k) acc -= chol_(i, k) * y[k];
    y[i] = acc / chol_(i, i);
  }
  // backward substitution L^T x = y
  std::vector<double> x(d);
  for (std::size_t ii = d; ii-- > 0;) {
    double acc = y[ii];
    for (std::size_t k = ii + 1; k < d; ++k) acc -= chol_(k, ii) * x[k];
    x[ii] = acc / chol_(ii, ii);
  }
  return x;
}

double CovarianceMatrix::log_det() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += std::log(chol_(i, i));
  return 2.0 * acc;
}

}  // namespace pmlab

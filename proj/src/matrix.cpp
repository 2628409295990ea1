#include "qheng/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qheng {

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = 1.0;
  return m;
}

double SquareMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

double SquareMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : a_)
    sum += v * v;
  return std::sqrt(sum);
}

double SquareMatrix::max_abs() const {
  double worst = 0.0;
  for (double v : a_)
    worst = std::max(worst, std::abs(v));
  return worst;
}

double SquareMatrix::max_abs_diff(const SquareMatrix &other) const {
  if (other.dim_ != dim_)
    throw std::invalid_argument("SquareMatrix::max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i)
    worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
  return worst;
}

double SquareMatrix::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    sum += (*this)(i, i);
  return sum;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix operator*(const SquareMatrix &lhs, const SquareMatrix &rhs) {
  if (lhs.dim_ != rhs.dim_)
    throw std::invalid_argument("SquareMatrix::operator*: dimension mismatch");
  const std::size_t n = lhs.dim_;
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double lik = lhs(i, k);
      if (lik == 0.0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += lik * rhs(k, j);
    }
  return out;
}

SquareMatrix operator-(const SquareMatrix &lhs, const SquareMatrix &rhs) {
  if (lhs.dim_ != rhs.dim_)
    throw std::invalid_argument("SquareMatrix::operator-: dimension mismatch");
  SquareMatrix out(lhs.dim_);
  for (std::size_t i = 0; i < lhs.a_.size(); ++i)
    out.a_[i] = lhs.a_[i] - rhs.a_[i];
  return out;
}

} // namespace qheng

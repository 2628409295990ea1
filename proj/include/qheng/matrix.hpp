// Dense square matrices of doubles. Everything in this project is tiny
// (dim <= 16), so plain row-major storage with no blocking is enough.
#pragma once

#include <cstddef>
#include <vector>

namespace qheng {

class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim, double fill = 0.0)
      : dim_(dim), a_(dim * dim, fill) {}

  static SquareMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  double &operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }

  // largest |a_ij - a_ji|
  double max_asymmetry() const;
  double frobenius_norm() const;
  double max_abs() const;
  double max_abs_diff(const SquareMatrix &other) const;
  double trace() const;

  SquareMatrix transposed() const;

  friend SquareMatrix operator*(const SquareMatrix &lhs,
                                const SquareMatrix &rhs);
  friend SquareMatrix operator-(const SquareMatrix &lhs,
                                const SquareMatrix &rhs);

private:
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

} // namespace qheng

#include "qheng/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qheng {

double EigenDecomposition::orthonormality_error() const {
  const SquareMatrix gram = vectors.transposed() * vectors;
  return gram.max_abs_diff(SquareMatrix::identity(vectors.dim()));
}

double EigenDecomposition::reconstruction_error(const SquareMatrix &m) const {
  const std::size_t n = vectors.dim();
  SquareMatrix vl(n); // V * diag(values)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      vl(i, j) = vectors(i, j) * values[j];
  return (vl * vectors.transposed()).max_abs_diff(m);
}

EigenDecomposition eigh_symmetric(const SquareMatrix &m) {
  const std::size_t n = m.dim();
  if (n == 0 || n > kJacobiMaxDim)
    throw std::invalid_argument("eigh_symmetric: dimension must be in [1, 16]");
  if (m.max_asymmetry() > 1e-12)
    throw std::invalid_argument("eigh_symmetric: matrix is not symmetric");

  SquareMatrix a = m;
  // symmetrize exactly so both triangles agree during the sweeps
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }
  SquareMatrix v = SquareMatrix::identity(n);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      max_diag = std::max(max_diag, std::abs(a(i, i)));
    const double threshold = 1e-14 * max_diag;

    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= threshold)
          continue;
        rotated = true;

        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != p && i != q) {
            const double aip = a(i, p);
            const double aiq = a(i, q);
            a(i, p) = c * aip - s * aiq;
            a(p, i) = a(i, p);
            a(i, q) = s * aip + c * aiq;
            a(q, i) = a(i, q);
          }
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
    if (!rotated) {
      EigenDecomposition dec;
      dec.values.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        dec.values[i] = a(i, i);

      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&dec](std::size_t lhs, std::size_t rhs) {
                         return dec.values[lhs] < dec.values[rhs];
                       });

      SquareMatrix sorted_v(n);
      std::vector<double> sorted_vals(n);
      for (std::size_t k = 0; k < n; ++k) {
        sorted_vals[k] = dec.values[order[k]];
        // fix the overall sign: largest-magnitude component positive
        std::size_t imax = 0;
        for (std::size_t i = 1; i < n; ++i)
          if (std::abs(v(i, order[k])) > std::abs(v(imax, order[k])))
            imax = i;
        const double sign = v(imax, order[k]) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i)
          sorted_v(i, k) = sign * v(i, order[k]);
      }
      dec.values = std::move(sorted_vals);
      dec.vectors = std::move(sorted_v);
      return dec;
    }
  }
  throw std::runtime_error("eigh_symmetric: Jacobi sweep cap exceeded");
}

} // namespace qheng

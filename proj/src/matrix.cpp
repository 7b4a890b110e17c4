#include "qapround/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qapround {

double symmetry_gap(const Matrix& m) {
  double gap = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      gap = std::max(gap, std::abs(m(i, j) - m(j, i)));
  return gap;
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

DoublyStochastic::DoublyStochastic(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw std::invalid_argument("doubly stochastic point must be square, n >= 1");
  if (!all_finite(m_))
    throw std::invalid_argument("doubly stochastic point has non-finite entries");
  if (m_.minCoeff() < -kEntryTolerance)
    throw std::invalid_argument("doubly stochastic point has entry below -1e-12: " +
                                std::to_string(m_.minCoeff()));
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    const double rs = m_.row(i).sum();
    const double cs = m_.col(i).sum();
    if (std::abs(rs - 1.0) > kSumTolerance || std::abs(cs - 1.0) > kSumTolerance)
      throw std::invalid_argument("row/column sum " + std::to_string(i) +
                                  " deviates from 1 beyond 1e-9");
  }
}

}  // namespace qapround

#pragma once

#include <Eigen/Dense>

namespace qapround {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Largest entrywise deviation from symmetry, max |M - M^T|.
double symmetry_gap(const Matrix& m);

bool all_finite(const Matrix& m);

/// A validated member of the Birkhoff polytope: nonnegative entries
/// (up to -1e-12) with unit row and column sums (within 1e-9).
class DoublyStochastic {
 public:
  explicit DoublyStochastic(Matrix m);

  const Matrix& value() const { return m_; }
  int n() const { return static_cast<int>(m_.rows()); }

  static constexpr double kEntryTolerance = 1e-12;
  static constexpr double kSumTolerance = 1e-9;

 private:
  Matrix m_;
};

}  // namespace qapround

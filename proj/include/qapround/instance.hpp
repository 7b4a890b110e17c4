#pragma once

#include <string>
#include <utility>

#include "qapround/matrix.hpp"
#include "qapround/permutation.hpp"

namespace qapround {

/// Problem data for minimizing tr((A X B + C) X^T) over permutation
/// matrices X. A and B must be symmetric; C defaults to zero.
class Instance {
 public:
  Instance(std::string name, Matrix a, Matrix b, Matrix c);
  Instance(std::string name, Matrix a, Matrix b);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  const Matrix& A() const { return a_; }
  const Matrix& B() const { return b_; }
  const Matrix& C() const { return c_; }

  static constexpr double kSymmetryTolerance = 1e-9;

 private:
  std::string name_;
  int n_;
  Matrix a_, b_, c_;
};

/// f(X) = sum_{i,j} A(i,j) B(p(i),p(j)) + sum_i C(i,p(i)).
/// O(n^2) evaluation; equals the trace form for symmetric A, B.
double objective(const Instance& inst, const Permutation& p);

/// f(X) = tr((A X B + C) X^T) for arbitrary real X (dense trace form).
double objective_general(const Instance& inst, const Matrix& x);

/// grad f(X) = 2 A X B + C.
Matrix gradient(const Instance& inst, const Matrix& x);

struct BruteForceResult {
  Permutation perm;
  double value;
};

/// Exhaustive minimizer over all n! permutations. Ties resolve to the
/// lexicographically smallest image. Guarded to n <= 9.
BruteForceResult brute_force_min(const Instance& inst);

}  // namespace qapround

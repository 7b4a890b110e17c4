#include "qapround/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qapround {

namespace {

void require_square(const Matrix& m, int n, const char* which) {
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument(std::string(which) + " is not " +
                                std::to_string(n) + "x" + std::to_string(n));
}

void require_symmetric(const Matrix& m, const char* which) {
  const double gap = symmetry_gap(m);
  if (gap > Instance::kSymmetryTolerance)
    throw std::invalid_argument(std::string(which) +
                                " is not symmetric (max deviation " +
                                std::to_string(gap) + ")");
}

}  // namespace

Instance::Instance(std::string name, Matrix a, Matrix b, Matrix c)
    : name_(std::move(name)),
      n_(static_cast<int>(a.rows())),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)) {
  if (n_ < 1) throw std::invalid_argument("instance order must be >= 1");
  require_square(a_, n_, "A");
  require_square(b_, n_, "B");
  require_square(c_, n_, "C");
  if (!all_finite(a_) || !all_finite(b_) || !all_finite(c_))
    throw std::invalid_argument("instance matrices must be finite");
  require_symmetric(a_, "A");
  require_symmetric(b_, "B");
}

Instance::Instance(std::string name, Matrix a, Matrix b)
    : Instance(std::move(name), a, std::move(b),
               Matrix::Zero(a.rows(), a.rows())) {}

double objective(const Instance& inst, const Permutation& p) {
  const int n = inst.n();
  if (p.size() != n) throw std::invalid_argument("permutation order mismatch");
  const Matrix& a = inst.A();
  const Matrix& b = inst.B();
  const Matrix& c = inst.C();
  double quad = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) quad += a(i, j) * b(p(i), p(j));
  double lin = 0.0;
  for (int i = 0; i < n; ++i) lin += c(i, p(i));
  return quad + lin;
}

double objective_general(const Instance& inst, const Matrix& x) {
  if (x.rows() != inst.n() || x.cols() != inst.n())
    throw std::invalid_argument("point order mismatch");
  return ((inst.A() * x * inst.B() + inst.C()) * x.transpose()).trace();
}

Matrix gradient(const Instance& inst, const Matrix& x) {
  if (x.rows() != inst.n() || x.cols() != inst.n())
    throw std::invalid_argument("point order mismatch");
  return 2.0 * (inst.A() * x * inst.B()) + inst.C();
}

BruteForceResult brute_force_min(const Instance& inst) {
  const int n = inst.n();
  if (n > 9)
    throw std::invalid_argument("brute force limited to n <= 9, got n=" +
                                std::to_string(n));
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<int> best_image = image;
  double best = objective(inst, Permutation(image));
  while (std::next_permutation(image.begin(), image.end())) {
    const double value = objective(inst, Permutation(image));
    if (value < best) {  // strict: first (lexicographically smallest) wins
      best = value;
      best_image = image;
    }
  }
  return BruteForceResult{Permutation(std::move(best_image)), best};
}

}  // namespace qapround

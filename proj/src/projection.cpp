#include "qapround/projection.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qapround/random.hpp"
#include "qapround/rounding.hpp"

namespace qapround {

namespace {

void require_order(int n) {
  if (n < 2)
    throw std::invalid_argument("projection basis requires n >= 2, got n=" +
                                std::to_string(n));
}

}  // namespace

ProjectionBasis householder_basis(int n) {
  require_order(n);
  // Reflector Q = I - 2uu'/u'u with u = e/||e|| - e1 maps e1 to e/||e||,
  // so Q is orthogonal with first column e/||e||; the remaining columns
  // span the complement of e.
  Vector u = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  u(0) -= 1.0;
  Matrix q = Matrix::Identity(n, n) - (2.0 / u.squaredNorm()) * (u * u.transpose());
  return ProjectionBasis{n, q.rightCols(n - 1)};
}

ProjectionBasis gram_schmidt_basis(int n, std::uint64_t seed) {
  require_order(n);
  std::mt19937_64 rng(seed);
  Matrix v(n, n - 1);
  const Vector e_unit = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int col = 0; col < n - 1; ++col) {
    while (true) {
      Vector w(n);
      for (int i = 0; i < n; ++i) w(i) = 2.0 * uniform_unit(rng) - 1.0;
      w -= e_unit.dot(w) * e_unit;
      for (int prior = 0; prior < col; ++prior) w -= v.col(prior).dot(w) * v.col(prior);
      // Second orthogonalization pass for numerical cleanliness.
      w -= e_unit.dot(w) * e_unit;
      for (int prior = 0; prior < col; ++prior) w -= v.col(prior).dot(w) * v.col(prior);
      const double norm = w.norm();
      if (norm > 1e-6) {  // redraw a degenerate direction
        v.col(col) = w / norm;
        break;
      }
    }
  }
  return ProjectionBasis{n, std::move(v)};
}

ReducedHessian reduced_hessian(const Instance& inst, const ProjectionBasis& basis) {
  const int n = inst.n();
  if (basis.n != n) throw std::invalid_argument("basis order mismatch");
  require_order(n);
  if (n > 40)
    throw std::invalid_argument(
        "dense reduced Hessian is limited to n <= 40 ((n-1)^4 entries); "
        "use reduced_gamma for larger orders");
  const Matrix a_red = basis.v.transpose() * inst.A() * basis.v;
  const Matrix b_red = basis.v.transpose() * inst.B() * basis.v;
  const int m = n - 1;
  Matrix h(m * m, m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      h.block(i * m, j * m, m, m) = b_red(i, j) * a_red;
  return ReducedHessian{n, std::move(h)};
}

double best_gamma_numeric(const ReducedHessian& h) {
  if (h.h.rows() != h.h.cols() || h.h.rows() < 1)
    throw std::invalid_argument("malformed reduced Hessian");
  return h.h.trace() / static_cast<double>(h.h.rows());
}

double reduced_gamma(const Instance& inst, const ProjectionBasis& basis) {
  const int n = inst.n();
  if (basis.n != n) throw std::invalid_argument("basis order mismatch");
  require_order(n);
  const double trace_a = (basis.v.transpose() * inst.A() * basis.v).trace();
  const double trace_b = (basis.v.transpose() * inst.B() * basis.v).trace();
  const double m = static_cast<double>(n - 1);
  return trace_b * trace_a / (m * m);
}

BasisIndependenceReport verify_basis_independence(const Instance& inst, int trials,
                               std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  require_order(inst.n());
  const int n = inst.n();
  const double gamma_closed = gamma_star(inst);
  const double gamma_tol = 1e-8 * (1.0 + std::abs(gamma_closed));
  const double trace_a_expect = inst.A().trace() - inst.A().sum() / n;
  const double trace_b_expect = inst.B().trace() - inst.B().sum() / n;
  const double trace_tol_a = 1e-9 * (1.0 + std::abs(inst.A().trace()));
  const double trace_tol_b = 1e-9 * (1.0 + std::abs(inst.B().trace()));

  BasisIndependenceReport report;
  report.gamma_closed_form = gamma_closed;
  report.max_gamma_deviation = 0.0;
  report.max_trace_deviation = 0.0;
  report.passed = true;

  auto check_basis = [&](const ProjectionBasis& basis, std::string label) {
    const double gamma = n <= 40
                             ? best_gamma_numeric(reduced_hessian(inst, basis))
                             : reduced_gamma(inst, basis);
    BasisCheck check;
    check.label = std::move(label);
    check.gamma = gamma;
    check.gamma_deviation = std::abs(gamma - gamma_closed);
    check.trace_deviation_a =
        std::abs((basis.v.transpose() * inst.A() * basis.v).trace() - trace_a_expect);
    check.trace_deviation_b =
        std::abs((basis.v.transpose() * inst.B() * basis.v).trace() - trace_b_expect);
    if (check.gamma_deviation > report.max_gamma_deviation) {
      report.max_gamma_deviation = check.gamma_deviation;
      report.worst_basis = check.label;
    }
    report.max_trace_deviation = std::max(
        {report.max_trace_deviation, check.trace_deviation_a, check.trace_deviation_b});
    if (check.gamma_deviation > gamma_tol || check.trace_deviation_a > trace_tol_a ||
        check.trace_deviation_b > trace_tol_b)
      report.passed = false;
    report.checks.push_back(std::move(check));
  };

  check_basis(householder_basis(n), "householder");
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t basis_seed = derive_seed(seed, inst.name(), 1000 + t);
    check_basis(gram_schmidt_basis(n, basis_seed),
                "seeded(" + std::to_string(basis_seed) + ")");
  }
  return report;
}

}  // namespace qapround

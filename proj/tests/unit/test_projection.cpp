#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qapround/projection.hpp"
#include "qapround/qaplib_io.hpp"
#include "qapround/rounding.hpp"

using namespace qapround;

namespace {

void check_basis_invariants(const ProjectionBasis& basis, double tol = 1e-12) {
  const int n = basis.n;
  REQUIRE(basis.v.rows() == n);
  REQUIRE(basis.v.cols() == n - 1);
  const Matrix gram = basis.v.transpose() * basis.v;
  CHECK((gram - Matrix::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <= tol);
  CHECK((basis.v.transpose() * Vector::Ones(n)).cwiseAbs().maxCoeff() <= tol);
}

// Independent scalar minimizer of ||H - gamma I||_F by golden section.
// Only the diagonal terms depend on gamma, so the objective reduces to
// sum_i (H_ii - gamma)^2 plus a constant; evaluating that sum in long
// double keeps the comparison noise floor below the 1e-8 match tolerance
// (a comparison search cannot localize a double-precision quadratic
// minimum better than ~sqrt(eps) * scale).
double scalar_golden_min(const Matrix& h) {
  auto diag_misfit = [&](long double gamma) {
    long double total = 0.0L;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      const long double d = static_cast<long double>(h(i, i)) - gamma;
      total += d * d;
    }
    return total;
  };
  const double scale = 1.0 + h.cwiseAbs().maxCoeff();
  long double lo = -scale, hi = scale;
  const long double ratio = 0.6180339887498949L;
  long double x1 = hi - ratio * (hi - lo);
  long double x2 = lo + ratio * (hi - lo);
  long double f1 = diag_misfit(x1), f2 = diag_misfit(x2);
  while (hi - lo > 1e-10L) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = diag_misfit(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = diag_misfit(x2);
    }
  }
  return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace

TEST_CASE("householder basis") {
  SUBCASE("n = 2 is the one-dimensional complement") {
    const ProjectionBasis basis = householder_basis(2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double sign = basis.v(0, 0) > 0 ? 1.0 : -1.0;
    CHECK(basis.v(0, 0) == doctest::Approx(sign * inv_sqrt2));
    CHECK(basis.v(1, 0) == doctest::Approx(-sign * inv_sqrt2));
    check_basis_invariants(basis);
  }

  SUBCASE("invariants hold for a range of orders") {
    for (int n : {2, 3, 5, 11, 30, 90}) check_basis_invariants(householder_basis(n));
  }

  SUBCASE("deterministic") {
    CHECK(householder_basis(7).v == householder_basis(7).v);
  }

  CHECK_THROWS_AS(householder_basis(1), std::invalid_argument);
}

TEST_CASE("seeded Gram-Schmidt basis") {
  const ProjectionBasis a = gram_schmidt_basis(5, 1);
  const ProjectionBasis b = gram_schmidt_basis(5, 2);
  check_basis_invariants(a, 1e-10);
  check_basis_invariants(b, 1e-10);
  CHECK((a.v - b.v).cwiseAbs().maxCoeff() > 1e-3);  // different seeds differ
  CHECK(a.v == gram_schmidt_basis(5, 1).v);         // same seed repeats
}

TEST_CASE("reduced Hessian") {
  SUBCASE("identity factors give the identity") {
    Instance inst("id4", Matrix::Identity(4, 4), Matrix::Identity(4, 4));
    const ReducedHessian h = reduced_hessian(inst, householder_basis(4));
    CHECK((h.h - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("scaling one factor scales the product") {
    Instance inst("scaled", Matrix::Identity(4, 4), 2.0 * Matrix::Identity(4, 4));
    const ReducedHessian h = reduced_hessian(inst, householder_basis(4));
    CHECK((h.h - 2.0 * Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("Kronecker trace identity") {
    std::mt19937_64 rng(23);
    const Instance inst = testutil::random_instance(4, rng);
    const ProjectionBasis basis = householder_basis(4);
    const ReducedHessian h = reduced_hessian(inst, basis);
    CHECK(symmetry_gap(h.h) <= 1e-9);
    const double trace_a = (basis.v.transpose() * inst.A() * basis.v).trace();
    const double trace_b = (basis.v.transpose() * inst.B() * basis.v).trace();
    CHECK(h.h.trace() == doctest::Approx(trace_a * trace_b).epsilon(1e-12));
  }

  SUBCASE("dense form is guarded above n = 40") {
    Instance inst("big", Matrix::Identity(41, 41), Matrix::Identity(41, 41));
    CHECK_THROWS_AS(reduced_hessian(inst, householder_basis(41)),
                    std::invalid_argument);
    CHECK(reduced_gamma(inst, householder_basis(41)) == doctest::Approx(1.0));
  }
}

TEST_CASE("best gamma numeric") {
  ReducedHessian identity{3, Matrix::Identity(4, 4)};
  CHECK(best_gamma_numeric(identity) == doctest::Approx(1.0));

  Matrix diag = Matrix::Zero(2, 2);
  diag(1, 1) = 2.0;
  ReducedHessian synthetic{2, diag};  // mean diagonal = 1
  CHECK(best_gamma_numeric(synthetic) == doctest::Approx(1.0));

  std::mt19937_64 rng(29);
  const Instance inst = testutil::random_instance(5, rng);
  const ReducedHessian h = reduced_hessian(inst, householder_basis(5));
  const double numeric = scalar_golden_min(h.h);
  CHECK(std::abs(best_gamma_numeric(h) - numeric) <= 1e-8);
}

TEST_CASE("closed-form gamma certification") {
  SUBCASE("identity instance is exact") {
    Instance inst("id5", Matrix::Identity(5, 5), Matrix::Identity(5, 5));
    const BasisIndependenceReport report = verify_basis_independence(inst, 5, 42);
    CHECK(report.passed);
    CHECK(report.gamma_closed_form == doctest::Approx(1.0));
    for (const BasisCheck& check : report.checks)
      CHECK(check.gamma == doctest::Approx(1.0));
  }

  SUBCASE("complete graph structure at n = 4") {
    const Matrix m = Matrix::Ones(4, 4) - Matrix::Identity(4, 4);
    Instance inst("ee4", m, m);
    const BasisIndependenceReport report = verify_basis_independence(inst, 5, 7);
    CHECK(report.passed);
    CHECK(report.gamma_closed_form == doctest::Approx(1.0));
  }

  SUBCASE("nug20 certifies within 1e-8 over random bases") {
    const Instance inst = load_instance(testutil::data_dir() / "nug20.dat");
    const BasisIndependenceReport report = verify_basis_independence(inst, 10, 20100425);
    CHECK(report.passed);
    CHECK(report.max_gamma_deviation <=
          1e-8 * (1.0 + std::abs(report.gamma_closed_form)));
    CHECK(report.checks.size() == 11);  // householder + 10 seeded
  }

  SUBCASE("large orders use the trace path") {
    const Instance inst = load_instance(testutil::data_dir() / "sko90.dat");
    const BasisIndependenceReport report = verify_basis_independence(inst, 3, 1);
    CHECK(report.passed);
  }

  SUBCASE("closed form matches numeric across random instances") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(uniform_below(rng, 7));
      const Instance inst = testutil::random_instance(n, rng);
      const double closed = gamma_star(inst);
      const ProjectionBasis basis =
          trial % 2 == 0 ? householder_basis(n) : gram_schmidt_basis(n, trial);
      const double numeric = best_gamma_numeric(reduced_hessian(inst, basis));
      CHECK(std::abs(closed - numeric) <= 1e-8 * (1.0 + std::abs(closed)));
    }
  }

  SUBCASE("trace identity holds for every valid basis") {
    std::mt19937_64 rng(37);
    const Instance inst = testutil::random_instance(6, rng);
    const double expected = inst.A().trace() - inst.A().sum() / 6.0;
    for (int seed = 0; seed < 10; ++seed) {
      const ProjectionBasis basis = gram_schmidt_basis(6, seed);
      const double actual = (basis.v.transpose() * inst.A() * basis.v).trace();
      CHECK(std::abs(actual - expected) <=
            1e-9 * (1.0 + std::abs(inst.A().trace())));
    }
  }

  SUBCASE("corollary reduction is exact on zero-diagonal nonnegative data") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(uniform_below(rng, 7));
      const Matrix a = testutil::random_flowlike(n, rng);
      const Matrix b = testutil::random_flowlike(n, rng);
      Instance inst("flow", a, b);
      const double dn = static_cast<double>(n);
      const double reduced = (a.sum() * b.sum()) / ((dn - 1) * (dn - 1) * dn * dn);
      CHECK(std::abs(gamma_star(inst) - reduced) <=
            1e-12 * (1.0 + std::abs(reduced)));
      CHECK(gamma_star(inst) >= 0.0);
    }
  }
}

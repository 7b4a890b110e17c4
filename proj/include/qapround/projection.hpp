#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qapround/instance.hpp"
#include "qapround/matrix.hpp"

namespace qapround {

/// An n x (n-1) orthonormal basis of the complement of the all-ones
/// vector: V'V = I_{n-1} and V'e = 0.
struct ProjectionBasis {
  int n;
  Matrix v;
};

/// Deterministic basis: the Householder reflector mapping e/||e|| onto the
/// first coordinate axis; columns 2..n of the reflection are the basis.
ProjectionBasis householder_basis(int n);

/// Random basis: seeded vectors orthonormalized against e (and each other)
/// by modified Gram-Schmidt. Used for V-independence checks.
ProjectionBasis gram_schmidt_basis(int n, std::uint64_t seed);

/// H = V'BV (x) V'AV, the QAP quadratic form on the complement of e.
/// Materialized densely; (n-1)^2 x (n-1)^2.
struct ReducedHessian {
  int n;
  Matrix h;
};

/// Guarded to n <= 40 (the dense form holds (n-1)^4 entries); above that
/// use reduced_gamma, which only needs the factor traces.
ReducedHessian reduced_hessian(const Instance& inst,
                               const ProjectionBasis& basis);

/// argmin_gamma ||H - gamma I||_F = tr(H) / (n-1)^2 (mean diagonal entry).
double best_gamma_numeric(const ReducedHessian& h);

/// tr(V'BV) tr(V'AV) / (n-1)^2 without materializing the Kronecker product.
double reduced_gamma(const Instance& inst, const ProjectionBasis& basis);

struct BasisCheck {
  std::string label;
  double gamma;
  double gamma_deviation;
  double trace_deviation_a;  // |tr(V'AV) - (trA - e'Ae/n)|
  double trace_deviation_b;
};

struct BasisIndependenceReport {
  double gamma_closed_form;
  std::vector<BasisCheck> checks;
  double max_gamma_deviation;
  double max_trace_deviation;
  bool passed;
  std::string worst_basis;  // label of the basis with the largest deviation
};

/// Certifies basis independence of gamma*: for the Householder basis plus
/// `trials` seeded random bases, the numeric Frobenius-nearest gamma must
/// match the closed form within 1e-8 (1 + |gamma*|), and the trace identity
/// tr(V'AV) = trA - e'Ae/n must hold within 1e-9 (1 + |trA|) for A and B.
BasisIndependenceReport verify_basis_independence(const Instance& inst, int trials,
                               std::uint64_t seed);

}  // namespace qapround

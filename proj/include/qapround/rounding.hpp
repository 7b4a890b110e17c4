#pragma once

#include <vector>

#include "qapround/instance.hpp"
#include "qapround/matrix.hpp"
#include "qapround/permutation.hpp"

namespace qapround {

struct RoundingResult {
  /// The parameter the permutation was produced at; 0 marks plain
  /// nearest-permutation rounding.
  double theta;
  Permutation perm;
  double objective;
  /// Number of linear assignment solves performed.
  int lap_solves;
};

struct ThetaSample {
  double theta;
  double objective;
  Permutation perm;
};

struct ThetaProfile {
  std::vector<ThetaSample> samples;  // strictly increasing theta
  double theta_max;
};

/// X0: the permutation matrix closest to xc in Frobenius norm, i.e. the
/// maximizer of tr(xc X^T). Standalone form: objective carries the
/// assignment value tr(xc X0^T), not a QAP objective.
RoundingResult nearest_permutation(const Matrix& xc);

/// X0 evaluated against an instance: same permutation, objective = f(X0).
RoundingResult round_x0(const Instance& inst, const Matrix& xc);

/// X(theta): minimizer of tr((grad f(xc) - theta xc) X^T); theta >= 0.
RoundingResult round_theta(const Instance& inst, const Matrix& xc,
                           double theta);

/// gamma* = (n trA - e'Ae)(n trB - e'Be) / ((n-1)^2 n^2), the scalar whose
/// multiple of the identity is Frobenius-nearest to the reduced Hessian
/// V'BV (x) V'AV, independent of the basis V. Requires n >= 2.
double gamma_star(const Instance& inst);

/// theta2 = 2 gamma*.
double theta2(const Instance& inst);

/// X2: round_theta at theta2. theta2 must be nonnegative.
RoundingResult round_x2(const Instance& inst, const Matrix& xc);

/// Default search sector upper end, max(theta2, 100).
double default_theta_max(const Instance& inst);

/// (theta1, X1): 0.618 search of g(theta) = f(X(theta)) over [0, M],
/// M = max(theta2, 100), stopping when the bracket is shorter than 1.
/// g is piecewise constant, so the search is heuristic; an incumbent over
/// every evaluation (including theta = 0, theta2 and M up front) is
/// returned, never the bare final bracket. First-evaluated wins ties.
RoundingResult golden_section_search(const Instance& inst, const Matrix& xc);

/// Same search over [0, theta_max] instead of the default sector.
RoundingResult golden_section_search(const Instance& inst, const Matrix& xc,
                                     double theta_max);

/// g sampled on the uniform grid {0, h, 2h, ..., theta_max}. Objectives of
/// repeated permutations are served from a per-call cache, so equal
/// permutations yield bitwise-equal objectives.
ThetaProfile theta_profile(const Instance& inst, const Matrix& xc,
                           int grid_points, double theta_max);

}  // namespace qapround

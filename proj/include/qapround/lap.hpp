#pragma once

#include "qapround/matrix.hpp"
#include "qapround/permutation.hpp"

namespace qapround {

struct LapSolution {
  Permutation assignment;
  double value;
  /// True when the computed dual potentials certified optimality
  /// (feasibility + complementary slackness within tolerance).
  bool dual_feasible;
};

/// Exact dense linear assignment: minimize sum_i cost(i, p(i)).
/// Shortest-augmenting-path with dual potentials, O(n^3). Deterministic:
/// rows are augmented in increasing order and column ties resolve to the
/// lowest index, so identical inputs give identical assignments.
LapSolution solve_lap_min(const Matrix& cost);

/// Maximize sum_i profit(i, p(i)) = tr(profit X^T); solved on -profit.
LapSolution solve_lap_max(const Matrix& profit);

enum class Sense { minimize, maximize };

/// Exhaustive reference solver, lexicographic tie-break. n <= 9.
LapSolution brute_force_lap(const Matrix& cost, Sense sense);

}  // namespace qapround

#include "qapround/lap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qapround {

namespace {

void require_valid_cost(const Matrix& cost) {
  if (cost.rows() != cost.cols() || cost.rows() < 1)
    throw std::invalid_argument("cost matrix must be square, n >= 1");
  if (!all_finite(cost))
    throw std::invalid_argument("cost matrix has NaN/Inf entries");
}

double assignment_value(const Matrix& cost, const Permutation& p) {
  double value = 0.0;
  for (int i = 0; i < p.size(); ++i) value += cost(i, p(i));
  return value;
}

bool certify_duals(const Matrix& cost, const Permutation& assignment,
                   const std::vector<double>& u, const std::vector<double>& v) {
  const int n = static_cast<int>(cost.rows());
  const double tol = 1e-9 * (1.0 + cost.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (cost(i, j) - u[i] - v[j] < -tol) return false;
    const int j = assignment(i);
    if (std::abs(cost(i, j) - u[i] - v[j]) > tol) return false;
  }
  return true;
}

}  // namespace

LapSolution solve_lap_min(const Matrix& cost) {
  require_valid_cost(cost);
  const int n = static_cast<int>(cost.rows());
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Shortest augmenting path over reduced costs, one row at a time. The
  // working arrays are 1-based over columns; column 0 is the virtual start.
  // u, v are the dual potentials; col_to_row[j] is the row matched to j.
  // Rows enter in increasing order and the strict '<' scans resolve ties to
  // the lowest column index, so the result is deterministic.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> col_to_row(n + 1, 0), prev_col(n + 1, 0);

  for (int row = 1; row <= n; ++row) {
    col_to_row[0] = row;
    int j0 = 0;
    std::vector<double> min_reduced(n + 1, kInf);
    std::vector<char> visited(n + 1, 0);
    do {
      visited[j0] = 1;
      const int i0 = col_to_row[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < min_reduced[j]) {
          min_reduced[j] = reduced;
          prev_col[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (visited[j]) {
          u[col_to_row[j]] += delta;
          v[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (col_to_row[j0] != 0);
    // Augment along the alternating path back to the virtual column.
    do {
      const int j1 = prev_col[j0];
      col_to_row[j0] = col_to_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> image(n, -1);
  for (int j = 1; j <= n; ++j) image[col_to_row[j] - 1] = j - 1;
  Permutation assignment(std::move(image));

  const std::vector<double> u0(u.begin() + 1, u.end());
  const std::vector<double> v0(v.begin() + 1, v.end());
  const bool certified = certify_duals(cost, assignment, u0, v0);
  const double value = assignment_value(cost, assignment);
  return LapSolution{std::move(assignment), value, certified};
}

LapSolution solve_lap_max(const Matrix& profit) {
  LapSolution s = solve_lap_min(-profit);
  s.value = -s.value;
  return s;
}

LapSolution brute_force_lap(const Matrix& cost, Sense sense) {
  require_valid_cost(cost);
  const int n = static_cast<int>(cost.rows());
  if (n > 9)
    throw std::invalid_argument("brute force limited to n <= 9, got n=" +
                                std::to_string(n));
  const double sign = sense == Sense::minimize ? 1.0 : -1.0;
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<int> best_image = image;
  double best = sign * assignment_value(cost, Permutation(image));
  while (std::next_permutation(image.begin(), image.end())) {
    const double value = sign * assignment_value(cost, Permutation(image));
    if (value < best) {  // strict: the lexicographically first optimum stays
      best = value;
      best_image = image;
    }
  }
  Permutation assignment(std::move(best_image));
  return LapSolution{std::move(assignment), sign * best, true};
}

}  // namespace qapround

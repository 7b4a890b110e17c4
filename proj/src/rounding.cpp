#include "qapround/rounding.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qapround/lap.hpp"

namespace qapround {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

void require_point(const Instance& inst, const Matrix& xc) {
  if (xc.rows() != inst.n() || xc.cols() != inst.n())
    throw std::invalid_argument("X_C order mismatch");
  if (!all_finite(xc)) throw std::invalid_argument("X_C has non-finite entries");
}

/// Evaluates g(theta) = f(X(theta)) with an objective cache keyed by the
/// returned permutation: distinct theta frequently map to one permutation,
/// whose f is then served bitwise-identically without recomputation.
class ThetaEvaluator {
 public:
  ThetaEvaluator(const Instance& inst, const Matrix& xc)
      : inst_(inst), xc_(xc), grad_(gradient(inst, xc)) {}

  RoundingResult operator()(double theta) {
    if (theta < 0.0)
      throw std::invalid_argument("theta must be nonnegative, got " +
                                  std::to_string(theta));
    LapSolution lap = solve_lap_min(grad_ - theta * xc_);
    ++lap_solves_;
    auto [it, inserted] = cache_.try_emplace(lap.assignment.image(), 0.0);
    if (inserted) it->second = objective(inst_, lap.assignment);
    return RoundingResult{theta, std::move(lap.assignment), it->second, lap_solves_};
  }

  int lap_solves() const { return lap_solves_; }

 private:
  const Instance& inst_;
  const Matrix& xc_;
  Matrix grad_;
  int lap_solves_ = 0;
  std::map<std::vector<int>, double> cache_;
};

}  // namespace

RoundingResult nearest_permutation(const Matrix& xc) {
  if (xc.rows() != xc.cols() || xc.rows() < 1)
    throw std::invalid_argument("X_C must be square, n >= 1");
  if (!all_finite(xc)) throw std::invalid_argument("X_C has non-finite entries");
  LapSolution lap = solve_lap_max(xc);
  return RoundingResult{0.0, std::move(lap.assignment), lap.value, 1};
}

RoundingResult round_x0(const Instance& inst, const Matrix& xc) {
  require_point(inst, xc);
  RoundingResult r = nearest_permutation(xc);
  r.objective = objective(inst, r.perm);
  return r;
}

RoundingResult round_theta(const Instance& inst, const Matrix& xc, double theta) {
  require_point(inst, xc);
  ThetaEvaluator evaluate(inst, xc);
  return evaluate(theta);
}

double gamma_star(const Instance& inst) {
  const int n = inst.n();
  if (n < 2) throw std::invalid_argument("gamma* requires n >= 2");
  const double trace_a = inst.A().trace();
  const double trace_b = inst.B().trace();
  const double sum_a = inst.A().sum();  // e'Ae
  const double sum_b = inst.B().sum();
  const double dn = static_cast<double>(n);
  return (dn * trace_a - sum_a) * (dn * trace_b - sum_b) /
         ((dn - 1.0) * (dn - 1.0) * dn * dn);
}

double theta2(const Instance& inst) { return 2.0 * gamma_star(inst); }

RoundingResult round_x2(const Instance& inst, const Matrix& xc) {
  if (inst.n() == 1) return round_theta(inst, xc, 0.0);  // unique permutation
  return round_theta(inst, xc, theta2(inst));
}

double default_theta_max(const Instance& inst) {
  return std::max(theta2(inst), 100.0);
}

RoundingResult golden_section_search(const Instance& inst, const Matrix& xc) {
  if (inst.n() == 1) return round_theta(inst, xc, 0.0);  // unique permutation
  return golden_section_search(inst, xc, default_theta_max(inst));
}

RoundingResult golden_section_search(const Instance& inst, const Matrix& xc,
                                     double theta_max) {
  require_point(inst, xc);
  if (!(theta_max > 0.0))
    throw std::invalid_argument("theta_max must be positive");
  ThetaEvaluator evaluate(inst, xc);

  RoundingResult best{0.0, Permutation::identity(inst.n()), 0.0, 0};
  bool have_best = false;
  auto consider = [&](double theta) -> double {
    RoundingResult r = evaluate(theta);
    if (!have_best || r.objective < best.objective) {  // first-evaluated wins ties
      best = r;
      have_best = true;
    }
    return r.objective;
  };

  // Endpoints first: theta = 0 is the pure gradient step, theta2 is the
  // closed-form prior (skipped when negative or coinciding), M closes the
  // sector. This makes X1 never worse than X0's parameter choices or X2
  // within one run.
  consider(0.0);
  const double t2 = inst.n() >= 2 ? theta2(inst) : 0.0;
  if (t2 > 0.0 && t2 < theta_max) consider(t2);
  consider(theta_max);

  double lo = 0.0;
  double hi = theta_max;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  if (hi - lo >= 1.0) {
    double f1 = consider(x1);
    double f2 = consider(x2);
    while (hi - lo >= 1.0) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kInvPhi * (hi - lo);
        f1 = consider(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kInvPhi * (hi - lo);
        f2 = consider(x2);
      }
    }
  }

  best.lap_solves = evaluate.lap_solves();
  return best;
}

ThetaProfile theta_profile(const Instance& inst, const Matrix& xc,
                           int grid_points, double theta_max) {
  require_point(inst, xc);
  if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
  if (!(theta_max > 0.0)) throw std::invalid_argument("theta_max must be positive");
  ThetaEvaluator evaluate(inst, xc);
  ThetaProfile profile;
  profile.theta_max = theta_max;
  profile.samples.reserve(static_cast<std::size_t>(grid_points));
  const double step = theta_max / static_cast<double>(grid_points - 1);
  for (int k = 0; k < grid_points; ++k) {
    const double theta =
        k == grid_points - 1 ? theta_max : static_cast<double>(k) * step;
    RoundingResult r = evaluate(theta);
    profile.samples.push_back(ThetaSample{theta, r.objective, std::move(r.perm)});
  }
  return profile;
}

}  // namespace qapround

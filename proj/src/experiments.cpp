#include "qapround/experiments.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qapround/random.hpp"
#include "qapround/rounding.hpp"

namespace qapround {

XcSpec XcSpec::uniform(int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  return XcSpec{r, std::vector<double>(static_cast<std::size_t>(r),
                                       1.0 / static_cast<double>(r))};
}

void XcSpec::validate() const {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (static_cast<int>(weights.size()) != r)
    throw std::invalid_argument("weights size must equal r");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("weights must sum to 1 within 1e-12, got " +
                                std::to_string(total));
}

DoublyStochastic random_xc(int n, const XcSpec& spec, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  spec.validate();
  std::mt19937_64 rng(seed);
  Matrix xc = Matrix::Zero(n, n);
  for (int i = 0; i < spec.r; ++i) {
    const Permutation p = random_permutation(n, rng);
    const double w = spec.weights[static_cast<std::size_t>(i)];
    for (int row = 0; row < n; ++row) xc(row, p(row)) += w;
  }
  return DoublyStochastic(std::move(xc));
}

ComparisonRow run_comparison(const Instance& inst, const XcSpec& spec, int runs,
                             std::uint64_t seed) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  spec.validate();

  ComparisonRow row;
  row.instance = inst.name();
  row.n = inst.n();
  row.r = spec.r;
  row.runs = runs;
  row.seed = seed;
  row.theta2 = inst.n() >= 2 ? theta2(inst) : 0.0;

  for (int k = 1; k <= runs; ++k) {
    const std::uint64_t child =
        derive_seed(seed, inst.name(), static_cast<std::uint64_t>(k));
    const Matrix xc = random_xc(inst.n(), spec, child).value();
    const auto run_start = std::chrono::steady_clock::now();
    const RoundingResult r0 = round_x0(inst, xc);
    const RoundingResult r1 = golden_section_search(inst, xc);
    const RoundingResult r2 = round_x2(inst, xc);
    row.mean_run_seconds += std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - run_start)
                                .count();
    const double run_max =
        std::max(r0.objective, std::max(r1.objective, r2.objective));
    double ratio0 = 1.0, ratio1 = 1.0, ratio2 = 1.0;
    if (run_max != 0.0) {  // all-zero objectives degenerate to ratio 1
      ratio0 = r0.objective / run_max;
      ratio1 = r1.objective / run_max;
      ratio2 = r2.objective / run_max;
    }
    row.mean_f0 += r0.objective;
    row.mean_f1 += r1.objective;
    row.mean_f2 += r2.objective;
    row.mean_ratio0 += ratio0;
    row.mean_ratio1 += ratio1;
    row.mean_ratio2 += ratio2;
    row.mean_theta1 += r1.theta;
    row.mean_lap_solves +=
        static_cast<double>(r0.lap_solves + r1.lap_solves + r2.lap_solves);
  }
  const double dr = static_cast<double>(runs);
  row.mean_f0 /= dr;
  row.mean_f1 /= dr;
  row.mean_f2 /= dr;
  row.mean_ratio0 /= dr;
  row.mean_ratio1 /= dr;
  row.mean_ratio2 /= dr;
  row.mean_theta1 /= dr;
  row.mean_lap_solves /= dr;
  row.mean_run_seconds /= dr;
  return row;
}

std::vector<TableEntry> run_table(const std::vector<Instance>& instances,
                                  RMode mode, int runs, std::uint64_t seed) {
  if (instances.empty()) throw std::invalid_argument("instance list is empty");
  std::vector<TableEntry> entries;
  entries.reserve(instances.size());
  for (const Instance& inst : instances) {
    TableEntry entry;
    try {
      const int r = mode == RMode::two ? 2 : std::max(1, inst.n() / 2);
      entry.row = run_comparison(inst, XcSpec::uniform(r), runs, seed);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace qapround

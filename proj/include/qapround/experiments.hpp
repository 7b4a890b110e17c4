#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qapround/instance.hpp"
#include "qapround/matrix.hpp"

namespace qapround {

/// How X_C is combined from random permutation matrices:
/// X_C = sum_i weights[i] P_i with weights >= 0 summing to 1.
struct XcSpec {
  int r;
  std::vector<double> weights;

  static XcSpec uniform(int r);
  void validate() const;
};

/// Draws r seeded random permutations and returns their convex combination.
/// Deterministic given (n, spec, seed).
DoublyStochastic random_xc(int n, const XcSpec& spec, std::uint64_t seed);

/// One table row: per-run f(X0), f(X1), f(X2) and their ratios to
/// Max = max(f0, f1, f2), averaged over the runs.
struct ComparisonRow {
  std::string instance;
  int n = 0;
  int r = 0;
  int runs = 0;
  std::uint64_t seed = 0;
  double mean_f0 = 0, mean_f1 = 0, mean_f2 = 0;
  double mean_ratio0 = 0, mean_ratio1 = 0, mean_ratio2 = 0;
  double theta2 = 0;        // run-independent, depends only on A and B
  double mean_theta1 = 0;
  double mean_lap_solves = 0;  // per-run total over the three methods
  // Captured for visibility, not serialized (the CSV schema is fixed).
  double mean_run_seconds = 0;
};

/// Ratios are normalized per run then averaged; a run with Max = 0 counts
/// all three ratios as 1. Run k draws X_C at derive_seed(seed, name, k).
ComparisonRow run_comparison(const Instance& inst, const XcSpec& spec,
                             int runs, std::uint64_t seed);

enum class RMode { two, half_n };

struct TableEntry {
  std::optional<ComparisonRow> row;
  std::string error;  // set when the instance failed; processing continues
};

/// run_comparison over each instance with r = 2 or r = floor(n/2) (at least
/// 1). Rows come back in input order; seeding is label-keyed, so order does
/// not affect any row.
std::vector<TableEntry> run_table(const std::vector<Instance>& instances,
                                  RMode mode, int runs, std::uint64_t seed);

}  // namespace qapround

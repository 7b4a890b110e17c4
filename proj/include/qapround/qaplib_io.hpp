#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qapround/experiments.hpp"
#include "qapround/instance.hpp"
#include "qapround/permutation.hpp"
#include "qapround/rounding.hpp"

namespace qapround {

/// Malformed instance/solution input. The message names the offending
/// token index (or the count mismatch) so fuzzed inputs fail loudly but
/// never crash.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// QAPLIB .dat grammar: whitespace-separated numeric tokens, line breaks
/// insignificant. First token n, then n^2 row-major entries of A, then n^2
/// of B; exactly n^2 further tokens form C, none means C = 0. Any other
/// leftover count is an error. A and B must be symmetric.
Instance parse_instance(std::string_view text, std::string name);
Instance parse_instance(std::istream& in, std::string name);

/// Reads a .dat file; the instance name is the file stem.
Instance load_instance(const std::filesystem::path& path);

struct SolutionFile {
  int n;
  double value;      // declared objective
  Permutation perm;  // stored 1-indexed in the file
};

/// QAPLIB .sln grammar: n, declared objective, then n 1-indexed entries.
SolutionFile parse_solution(std::string_view text);
SolutionFile parse_solution(std::istream& in);
SolutionFile load_solution(const std::filesystem::path& path);

/// Header `theta,objective,perm`; numbers at 10 significant digits, perm as
/// dash-joined 1-based indices. Byte-deterministic for identical input.
void write_profile_csv(const ThetaProfile& profile, std::ostream& out);

/// Header `instance,n,r,runs,seed,f0,f1,f2,ratio0,ratio1,ratio2,theta2,
/// theta1_mean,lap_solves_mean`; one row per entry.
void write_comparison_csv(const std::vector<ComparisonRow>& rows,
                          std::ostream& out);

/// %.10g formatting shared by the CSV writers and the CLI. Integral values
/// print without a decimal point, matching QAPLIB's integer objectives.
std::string format_number(double v);

}  // namespace qapround

#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "qapround/instance.hpp"
#include "qapround/matrix.hpp"
#include "qapround/random.hpp"

namespace testutil {

inline std::filesystem::path data_dir() {
#ifdef QAPROUND_DATA_DIR
  return std::filesystem::path(QAPROUND_DATA_DIR);
#else
  return std::filesystem::path("data/qaplib");
#endif
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * qapround::uniform_unit(rng);
}

inline qapround::Matrix random_symmetric(int n, std::mt19937_64& rng,
                                         double lo = -1.0, double hi = 1.0) {
  qapround::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(rng, lo, hi);
  return m;
}

inline qapround::Matrix random_dense(int n, std::mt19937_64& rng,
                                     double lo = -1.0, double hi = 1.0) {
  qapround::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

inline qapround::Matrix random_integer_matrix(int n, std::mt19937_64& rng,
                                              int lo, int hi) {
  qapround::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = static_cast<double>(
          lo + static_cast<int>(qapround::uniform_below(
                   rng, static_cast<std::uint64_t>(hi - lo + 1))));
  return m;
}

inline qapround::Instance random_instance(int n, std::mt19937_64& rng,
                                          std::string name = "random",
                                          bool with_linear = true) {
  qapround::Matrix a = random_symmetric(n, rng);
  qapround::Matrix b = random_symmetric(n, rng);
  qapround::Matrix c = with_linear ? random_dense(n, rng)
                                   : qapround::Matrix::Zero(n, n);
  return qapround::Instance(std::move(name), std::move(a), std::move(b),
                            std::move(c));
}

/// Zero diagonal, nonnegative off-diagonal, symmetric: the structure of
/// the QAPLIB flow/distance families.
inline qapround::Matrix random_flowlike(int n, std::mt19937_64& rng,
                                        double hi = 10.0) {
  qapround::Matrix m = qapround::Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = uniform(rng, 0.0, hi);
  return m;
}

}  // namespace testutil

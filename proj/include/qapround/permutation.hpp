#pragma once

#include <cstdint>
#include <vector>

#include "qapround/matrix.hpp"

namespace qapround {

/// A bijection of {0..n-1}. image()[i] is the column assigned to row i,
/// so the matrix form X has X(i, image()[i]) = 1 and zeros elsewhere.
/// File formats use 1-based indices; conversion happens at the IO boundary.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation from_one_based(const std::vector<int>& image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  Matrix to_matrix() const;
  std::vector<int> one_based() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

}  // namespace qapround

#include "qapround/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qapround {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : image_) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                  " out of range for n=" + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation repeats entry " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(const std::vector<int>& image) {
  std::vector<int> zero_based;
  zero_based.reserve(image.size());
  for (int v : image) zero_based.push_back(v - 1);
  return Permutation(std::move(zero_based));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i)
    inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Matrix Permutation::to_matrix() const {
  const int n = size();
  Matrix x = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) x(i, (*this)(i)) = 1.0;
  return x;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(image_.size());
  for (int v : image_) out.push_back(v + 1);
  return out;
}

}  // namespace qapround

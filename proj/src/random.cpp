#include "qapround/random.hpp"

#include <numeric>
#include <stdexcept>

namespace qapround {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be > 0");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(
        uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(image));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void fnv_absorb(std::uint64_t& h, const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(master >> (8 * i));
  fnv_absorb(h, buf, 8);
  fnv_absorb(h, label.data(), label.size());
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(index >> (8 * i));
  fnv_absorb(h, buf, 8);
  return splitmix64(h);
}

}  // namespace qapround

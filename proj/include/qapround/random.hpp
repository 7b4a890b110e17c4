#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "qapround/permutation.hpp"

namespace qapround {

/// Unbiased integer in [0, bound) by rejection sampling. std::mt19937_64 is
/// fully specified by the standard; the standard distributions are not, so
/// reproducible draws go through this instead.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Double in [0, 1) from the top 53 bits of one engine draw.
double uniform_unit(std::mt19937_64& rng);

/// Fisher-Yates shuffle of the identity, high index down.
Permutation random_permutation(int n, std::mt19937_64& rng);

/// Stable child-seed derivation: FNV-1a over (master, label, index) with a
/// final splitmix64 mix. Label-keyed so reordering instances cannot change
/// any instance's stream.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);

}  // namespace qapround

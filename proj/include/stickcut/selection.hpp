#pragma once

#include <cstdint>
#include <vector>

#include "stickcut/rational.hpp"

namespace stickcut {

/// Seed used whenever the caller does not care. Selection results never
/// depend on the seed, only pivot luck does.
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

/// The rank-th largest element counting multiplicity (rank 1 = maximum),
/// i.e. position `rank` of the values sorted non-increasingly.
/// Expected linear time: randomized quickselect with a three-way partition
/// (pivot index drawn from an mt19937_64 seeded with `seed`), so runs of
/// duplicates collapse in one round instead of degrading the recursion.
/// Throws std::domain_error unless 1 <= rank <= values.size().
Rational select_kth_largest(std::vector<Rational> values, std::uint64_t rank,
                            std::uint64_t seed = kDefaultSeed);

}  // namespace stickcut

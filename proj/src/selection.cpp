#include "stickcut/selection.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace stickcut {

Rational select_kth_largest(std::vector<Rational> values, std::uint64_t rank,
                            std::uint64_t seed) {
    if (rank < 1 || rank > values.size()) {
        throw std::domain_error("selection rank out of range");
    }
    // rank-th largest = element at this position once sorted ascending.
    const std::size_t target = values.size() - static_cast<std::size_t>(rank);

    std::mt19937_64 rng(seed);
    std::size_t lo = 0;
    std::size_t hi = values.size() - 1;
    while (lo < hi) {
        const Rational pivot = values[lo + rng() % (hi - lo + 1)];
        // Dutch-flag pass: [lo, lt) < pivot, [lt, i) == pivot, (gt, hi] > pivot.
        std::size_t lt = lo;
        std::size_t gt = hi;
        std::size_t i = lo;
        while (i <= gt) {
            const auto order = values[i] <=> pivot;
            if (order < 0) {
                std::swap(values[i++], values[lt++]);
            } else if (order > 0) {
                std::swap(values[i], values[gt--]);
            } else {
                ++i;
            }
        }
        if (target < lt) {
            hi = lt - 1;
        } else if (target > gt) {
            lo = gt + 1;
        } else {
            return pivot;
        }
    }
    return values[lo];
}

}  // namespace stickcut

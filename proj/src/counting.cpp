#include "stickcut/counting.hpp"

#include <stdexcept>

namespace stickcut {

void validate(const Instance& inst) {
    if (inst.sticks.empty()) {
        throw std::domain_error("instance has no sticks");
    }
    if (inst.k < 1) {
        throw std::domain_error("k must be positive");
    }
    for (const Rational& stick : inst.sticks) {
        if (!stick.is_positive()) {
            throw std::domain_error("non-positive stick length");
        }
    }
}

std::uint64_t m_single(const Rational& stick, const Rational& cut) {
    return floor_quot(stick, cut);
}

std::uint64_t p_single(const Rational& stick, const Rational& cut) {
    return ceil_quot(stick, cut);
}

std::uint64_t c_single(const Rational& stick, const Rational& cut) {
    return ceil_quot(stick, cut) - 1;
}

std::uint64_t lpieces(const Instance& inst, const Rational& cut) {
    std::uint64_t total = 0;
    for (const Rational& stick : inst.sticks) {
        total += m_single(stick, cut);
    }
    return total;
}

std::uint64_t cuts(const Instance& inst, const Rational& cut) {
    std::uint64_t total = 0;
    for (const Rational& stick : inst.sticks) {
        total += c_single(stick, cut);
    }
    return total;
}

bool feasible(const Instance& inst, const Rational& cut) {
    return lpieces(inst, cut) >= inst.k;
}

std::optional<std::uint64_t> canonical_cutting(const Instance& inst, const Rational& cut) {
    if (!feasible(inst, cut)) {
        return std::nullopt;
    }
    return cuts(inst, cut);
}

IndexSet indices_above(const Instance& inst, const Rational& bound) {
    IndexSet indices;
    for (std::size_t i = 0; i < inst.sticks.size(); ++i) {
        if (inst.sticks[i] > bound) {
            indices.push_back(i);
        }
    }
    return indices;
}

std::uint64_t lpieces_restricted(const Instance& inst, const IndexSet& indices,
                                 const Rational& cut) {
    std::uint64_t total = 0;
    for (const std::size_t i : indices) {
        total += m_single(inst.sticks[i], cut);
    }
    return total;
}

}  // namespace stickcut

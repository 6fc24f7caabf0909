#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stickcut/rational.hpp"

namespace stickcut {

/// A problem instance: the multiset of stick lengths (kept in input order,
/// duplicates as separate entries) and the required number k of maximal
/// pieces. All counting below sums over indices, never over distinct values.
struct Instance {
    std::vector<Rational> sticks;
    std::uint64_t k = 1;

    std::size_t n() const { return sticks.size(); }
};

/// 0-based positions into Instance::sticks; no duplicates.
using IndexSet = std::vector<std::size_t>;

/// Throws std::domain_error unless n >= 1, k >= 1 and every length > 0.
void validate(const Instance& inst);

/// Maximal pieces of length `cut` obtainable from one stick: ⌊L/l⌋.
std::uint64_t m_single(const Rational& stick, const Rational& cut);

/// Total pieces produced by the canonical division of one stick: ⌈L/l⌉.
std::uint64_t p_single(const Rational& stick, const Rational& cut);

/// Cuts needed for one stick: ⌈L/l⌉ - 1.
std::uint64_t c_single(const Rational& stick, const Rational& cut);

/// Sum of m_single over all sticks.
std::uint64_t lpieces(const Instance& inst, const Rational& cut);

/// Sum of c_single over all sticks.
std::uint64_t cuts(const Instance& inst, const Rational& cut);

/// True iff lpieces(inst, cut) >= inst.k.
bool feasible(const Instance& inst, const Rational& cut);

/// Fixed-length problem: the cut count if `cut` is feasible, nullopt
/// ("not possible") otherwise.
std::optional<std::uint64_t> canonical_cutting(const Instance& inst, const Rational& cut);

/// Indices of sticks strictly longer than `bound` (ascending). bound = 0
/// selects everything.
IndexSet indices_above(const Instance& inst, const Rational& bound);

/// Sum of m_single over `indices` only. Equals lpieces(inst, cut) whenever
/// indices = indices_above(inst, B) for some B < cut; the caller owns that
/// precondition, nothing is checked here.
std::uint64_t lpieces_restricted(const Instance& inst, const IndexSet& indices,
                                 const Rational& cut);

}  // namespace stickcut

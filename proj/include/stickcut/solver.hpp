#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stickcut/candidates.hpp"
#include "stickcut/counting.hpp"
#include "stickcut/selection.hpp"

namespace stickcut {

enum class Algorithm { Search, Select };
enum class Bounds { Quadratic, Linearithmic, Sandwich };

/// One of the six algorithm/bounds combinations; all are valid and must
/// agree on the answer.
struct Strategy {
    Algorithm algorithm = Algorithm::Select;
    Bounds bounds = Bounds::Sandwich;
};

/// Per-stick cutting plan: how many maximal pieces and how many cuts the
/// canonical division produces for this stick at the optimal length.
struct PlanEntry {
    std::size_t stick_index;
    std::uint64_t maximal_pieces;
    std::uint64_t cut_count;
};

struct Solution {
    Rational l_star;
    std::uint64_t cuts = 0;    // total cuts at l_star
    std::uint64_t pieces = 0;  // lpieces at l_star, >= k
    std::optional<std::vector<PlanEntry>> plan;
    Strategy strategy;
    std::uint64_t candidates = 0;  // materialized multiset size (0 on the early-answer path)
    bool early_answer = false;
};

/// Binary search over the sorted, deduplicated candidate multiset for the
/// largest feasible value. Feasibility probes restrict the sum to the
/// surviving sticks; values at or below the cut-off are feasible for free.
Solution search_lstar(const Instance& inst, Bounds bounds,
                      std::uint64_t seed = kDefaultSeed);

/// Rank selection on the duplicate-preserving candidate multiset: the
/// optimum is its k'-th largest element, no feasibility probes needed.
Solution select_lstar(const Instance& inst, Bounds bounds,
                      std::uint64_t seed = kDefaultSeed);

/// Brute-force oracle: sorts the distinct values of {L_i/j : j <= k}
/// descending and returns the first feasible one, probing with the full
/// unrestricted piece count every time.
Rational oracle_scan(const Instance& inst);

/// Independent second oracle: the k-th largest element (with multiplicity)
/// of the full n·k candidate multiset, via std::nth_element.
Rational oracle_rank(const Instance& inst);

/// Dispatches on the strategy and optionally fills in the per-stick plan.
Solution solve(const Instance& inst, Strategy strategy, bool want_plan = false,
               std::uint64_t seed = kDefaultSeed);

const char* to_string(Algorithm a);
const char* to_string(Bounds b);
std::string to_string(Strategy s);  // e.g. "select+sandwich"

}  // namespace stickcut

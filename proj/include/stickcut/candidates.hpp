#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stickcut/counting.hpp"
#include "stickcut/selection.hpp"

namespace stickcut {

/// A restriction (I, f_l, f_u): the stick indices to draw candidates from
/// plus per-stick denominator bounds. `lower` and `upper` run parallel to
/// `indices`; 1 <= lower[p] <= upper[p] everywhere. The order of `indices`
/// fixes the order of the materialized multiset.
struct Restriction {
    IndexSet indices;
    std::vector<std::uint64_t> lower;
    std::vector<std::uint64_t> upper;

    std::uint64_t multiset_size() const;
};

/// One candidate cut length L_i/j together with where it came from.
struct CandidateEntry {
    Rational value;
    std::size_t stick_index;
    std::uint64_t denominator;
};

/// Explicit candidate multiset; duplicates are kept (rank selection counts
/// them), deduplication happens at the call sites that want it.
struct CandidateMultiset {
    std::vector<CandidateEntry> entries;

    std::uint64_t size() const { return entries.size(); }
    std::vector<Rational> values() const;
};

/// Output of the shared preprocessing step: the cut-off length (k-th
/// largest stick, or 0 when k > n), the indices of strictly longer sticks,
/// and, when the cut-off is itself the optimum, the answer outright.
/// `above` is only meaningful when early_answer is empty.
struct CutoffResult {
    Rational cutoff;
    IndexSet above;
    std::optional<Rational> early_answer;
};

/// Preprocessing shared by both end-to-end algorithms. Selects the cut-off
/// length by seeded quickselect, tests it for optimality, and otherwise
/// assembles the surviving index set in one scan.
CutoffResult compute_cutoff(const Instance& inst, std::uint64_t seed = kDefaultSeed);

/// True iff `cutoff` (> 0) is the maximal feasible cut length: it must be
/// feasible and losing the a sticks it divides exactly must drop the piece
/// count below k just above it.
bool is_optimal_cutoff(const Instance& inst, const Rational& cutoff);

/// Denominators 1..k for every index: the obvious admissible family.
Restriction restriction_quadratic(const Instance& inst, const IndexSet& above);

/// Rank-dependent upper bounds: the i-th longest surviving stick gets
/// denominators 1..⌈k/i⌉. Sorts `above` by decreasing length (ties by
/// ascending index) internally.
Restriction restriction_linearithmic(const Instance& inst, const IndexSet& above);

/// The interval (l_lo, l_hi) that pins the optimum:
///   l_lo = max{L_co, Σ/(k + |I_co|)} is feasible,
///   l_hi = Σ/k with every length beyond it infeasible,
/// where Σ sums the surviving stick lengths. Requires a cutoff without an
/// early answer (throws std::logic_error otherwise).
std::pair<Rational, Rational> sandwich_interval(const Instance& inst,
                                                const CutoffResult& cutoff);

/// Denominator bounds derived from the sandwich interval:
/// lower = p(L_i, l_hi), upper = p(L_i, l_lo). At most three candidates
/// per surviving stick.
Restriction restriction_sandwich(const Instance& inst, const CutoffResult& cutoff);

/// Expands a restriction into the explicit multiset, indices in restriction
/// order, denominators ascending within each stick.
CandidateMultiset materialize(const Instance& inst, const Restriction& r);

/// Selection rank adjusted for skipped small denominators:
/// k' = k - Σ (lower(i) - 1). A result outside [1, multiset size] certifies
/// a non-admissible restriction and throws std::logic_error.
std::uint64_t k_prime(const Restriction& r, std::uint64_t k);

std::uint64_t distinct_count(const CandidateMultiset& c);

/// Test utility: verifies the three admissibility conditions directly.
/// (i) lower(i) = 1 or L_i/(lower(i)-1) infeasible, (ii) L_i/upper(i)
/// feasible, (iii) every excluded stick length feasible but not optimal.
/// `optimal` must come from an independent source (one of the oracles).
bool check_admissible(const Instance& inst, const Restriction& r, const Rational& optimal);

}  // namespace stickcut

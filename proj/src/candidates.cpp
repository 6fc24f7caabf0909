#include "stickcut/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace stickcut {

std::uint64_t Restriction::multiset_size() const {
    std::uint64_t total = 0;
    for (std::size_t p = 0; p < indices.size(); ++p) {
        total += upper[p] - lower[p] + 1;
    }
    return total;
}

std::vector<Rational> CandidateMultiset::values() const {
    std::vector<Rational> out;
    out.reserve(entries.size());
    for (const CandidateEntry& e : entries) {
        out.push_back(e.value);
    }
    return out;
}

bool is_optimal_cutoff(const Instance& inst, const Rational& cutoff) {
    if (!cutoff.is_positive()) {
        throw std::domain_error("is_optimal_cutoff: cutoff must be positive");
    }
    std::uint64_t pieces = 0;
    std::uint64_t integral = 0;  // sticks the cutoff divides exactly
    for (const Rational& stick : inst.sticks) {
        pieces += m_single(stick, cutoff);
        if (is_integer_multiple(stick, cutoff)) {
            ++integral;
        }
    }
    // Feasible, and infeasible immediately above: each exactly-divided stick
    // loses one maximal piece the moment the cut length exceeds the cutoff.
    return pieces >= inst.k && pieces - integral < inst.k;
}

CutoffResult compute_cutoff(const Instance& inst, std::uint64_t seed) {
    CutoffResult result;
    if (inst.k <= inst.n()) {
        result.cutoff = select_kth_largest(inst.sticks, inst.k, seed);
        if (is_optimal_cutoff(inst, result.cutoff)) {
            result.early_answer = result.cutoff;
            return result;
        }
        result.above = indices_above(inst, result.cutoff);
        if (result.above.empty()) {
            // Cannot happen: a non-optimal cutoff lies below the optimum,
            // hence below the longest stick.
            throw std::logic_error("empty index set without early answer");
        }
    } else {
        result.cutoff = Rational();
        result.above.resize(inst.n());
        for (std::size_t i = 0; i < inst.n(); ++i) {
            result.above[i] = i;
        }
    }
    return result;
}

Restriction restriction_quadratic(const Instance& inst, const IndexSet& above) {
    Restriction r;
    r.indices = above;
    r.lower.assign(above.size(), 1);
    r.upper.assign(above.size(), inst.k);
    return r;
}

Restriction restriction_linearithmic(const Instance& inst, const IndexSet& above) {
    Restriction r;
    r.indices = above;
    std::sort(r.indices.begin(), r.indices.end(), [&](std::size_t a, std::size_t b) {
        const auto order = inst.sticks[a] <=> inst.sticks[b];
        if (order != 0) return order > 0;
        return a < b;
    });
    r.lower.assign(r.indices.size(), 1);
    r.upper.resize(r.indices.size());
    for (std::size_t p = 0; p < r.indices.size(); ++p) {
        const std::uint64_t rank = p + 1;
        r.upper[p] = (inst.k + rank - 1) / rank;  // ⌈k/rank⌉
    }
    return r;
}

std::pair<Rational, Rational> sandwich_interval(const Instance& inst,
                                                const CutoffResult& cutoff) {
    if (cutoff.early_answer) {
        throw std::logic_error("sandwich_interval: cutoff already optimal");
    }
    Rational sum;
    for (const std::size_t i : cutoff.above) {
        sum = sum + inst.sticks[i];
    }
    const Rational count(cutoff.above.size());
    const Rational lower_candidate = sum / (Rational(inst.k) + count);
    const Rational l_lo = std::max(cutoff.cutoff, lower_candidate);
    const Rational l_hi = sum / Rational(inst.k);
    return {l_lo, l_hi};
}

Restriction restriction_sandwich(const Instance& inst, const CutoffResult& cutoff) {
    const auto [l_lo, l_hi] = sandwich_interval(inst, cutoff);
    Restriction r;
    r.indices = cutoff.above;
    r.lower.reserve(r.indices.size());
    r.upper.reserve(r.indices.size());
    for (const std::size_t i : r.indices) {
        r.lower.push_back(p_single(inst.sticks[i], l_hi));
        r.upper.push_back(p_single(inst.sticks[i], l_lo));
    }
    return r;
}

CandidateMultiset materialize(const Instance& inst, const Restriction& r) {
    CandidateMultiset c;
    c.entries.reserve(static_cast<std::size_t>(r.multiset_size()));
    for (std::size_t p = 0; p < r.indices.size(); ++p) {
        const std::size_t i = r.indices[p];
        for (std::uint64_t j = r.lower[p]; j <= r.upper[p]; ++j) {
            c.entries.push_back({inst.sticks[i] / Rational(j), i, j});
        }
    }
    return c;
}

std::uint64_t k_prime(const Restriction& r, std::uint64_t k) {
    std::uint64_t skipped = 0;
    for (const std::uint64_t low : r.lower) {
        skipped += low - 1;
    }
    if (skipped >= k || k - skipped > r.multiset_size()) {
        throw std::logic_error("adjusted selection rank out of range (restriction not admissible)");
    }
    return k - skipped;
}

std::uint64_t distinct_count(const CandidateMultiset& c) {
    std::vector<Rational> values = c.values();
    std::sort(values.begin(), values.end());
    return std::unique(values.begin(), values.end()) - values.begin();
}

bool check_admissible(const Instance& inst, const Restriction& r, const Rational& optimal) {
    for (std::size_t p = 0; p < r.indices.size(); ++p) {
        const Rational& stick = inst.sticks[r.indices[p]];
        if (r.lower[p] > 1 && feasible(inst, stick / Rational(r.lower[p] - 1))) {
            return false;
        }
        if (!feasible(inst, stick / Rational(r.upper[p]))) {
            return false;
        }
    }
    std::vector<bool> included(inst.n(), false);
    for (const std::size_t i : r.indices) {
        included[i] = true;
    }
    for (std::size_t i = 0; i < inst.n(); ++i) {
        if (included[i]) continue;
        if (!feasible(inst, inst.sticks[i]) || inst.sticks[i] == optimal) {
            return false;
        }
    }
    return true;
}

}  // namespace stickcut

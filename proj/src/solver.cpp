#include "stickcut/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace stickcut {

namespace {

Restriction build_restriction(const Instance& inst, const CutoffResult& cutoff,
                              Bounds bounds) {
    switch (bounds) {
        case Bounds::Quadratic:
            return restriction_quadratic(inst, cutoff.above);
        case Bounds::Linearithmic:
            return restriction_linearithmic(inst, cutoff.above);
        case Bounds::Sandwich:
            return restriction_sandwich(inst, cutoff);
    }
    throw std::logic_error("unknown bounds family");
}

Solution finish(const Instance& inst, Strategy strategy, Rational l_star,
                std::uint64_t candidate_count, bool early) {
    Solution sol;
    sol.l_star = std::move(l_star);
    sol.cuts = cuts(inst, sol.l_star);
    sol.pieces = lpieces(inst, sol.l_star);
    sol.strategy = strategy;
    sol.candidates = candidate_count;
    sol.early_answer = early;
    return sol;
}

}  // namespace

Solution search_lstar(const Instance& inst, Bounds bounds, std::uint64_t seed) {
    const Strategy strategy{Algorithm::Search, bounds};
    const CutoffResult cutoff = compute_cutoff(inst, seed);
    if (cutoff.early_answer) {
        return finish(inst, strategy, *cutoff.early_answer, 0, true);
    }

    const Restriction r = build_restriction(inst, cutoff, bounds);
    const CandidateMultiset multiset = materialize(inst, r);
    const std::uint64_t multiset_size = multiset.size();

    std::vector<Rational> sorted = multiset.values();
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Values at most the cut-off inherit its feasibility; everything else
    // is probed with the sum restricted to the surviving sticks.
    const auto is_feasible = [&](const Rational& value) {
        if (value <= cutoff.cutoff) return true;
        return lpieces_restricted(inst, cutoff.above, value) >= inst.k;
    };

    // Largest index with a feasible value; the predicate is monotone
    // (true up to the optimum, false after), so invariant: lo feasible,
    // everything above hi infeasible.
    if (!is_feasible(sorted.front())) {
        throw std::logic_error("no feasible candidate (restriction not admissible)");
    }
    std::size_t lo = 0;
    std::size_t hi = sorted.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (is_feasible(sorted[mid])) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return finish(inst, strategy, std::move(sorted[lo]), multiset_size, false);
}

Solution select_lstar(const Instance& inst, Bounds bounds, std::uint64_t seed) {
    const Strategy strategy{Algorithm::Select, bounds};
    const CutoffResult cutoff = compute_cutoff(inst, seed);
    if (cutoff.early_answer) {
        return finish(inst, strategy, *cutoff.early_answer, 0, true);
    }

    const Restriction r = build_restriction(inst, cutoff, bounds);
    CandidateMultiset multiset = materialize(inst, r);
    const std::uint64_t multiset_size = multiset.size();
    const std::uint64_t rank = k_prime(r, inst.k);

    std::vector<Rational> values;
    values.reserve(multiset.entries.size());
    for (CandidateEntry& e : multiset.entries) {
        values.push_back(std::move(e.value));
    }
    Rational l_star = select_kth_largest(std::move(values), rank, seed);
    return finish(inst, strategy, std::move(l_star), multiset_size, false);
}

Rational oracle_scan(const Instance& inst) {
    std::vector<Rational> candidates;
    candidates.reserve(inst.n() * static_cast<std::size_t>(inst.k));
    for (const Rational& stick : inst.sticks) {
        for (std::uint64_t j = 1; j <= inst.k; ++j) {
            candidates.push_back(stick / Rational(j));
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Rational& a, const Rational& b) { return a > b; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const Rational& candidate : candidates) {
        if (feasible(inst, candidate)) {
            return candidate;
        }
    }
    throw std::logic_error("no feasible candidate up to denominator k");
}

Rational oracle_rank(const Instance& inst) {
    std::vector<Rational> candidates;
    candidates.reserve(inst.n() * static_cast<std::size_t>(inst.k));
    for (const Rational& stick : inst.sticks) {
        for (std::uint64_t j = 1; j <= inst.k; ++j) {
            candidates.push_back(stick / Rational(j));
        }
    }
    const std::size_t target = candidates.size() - static_cast<std::size_t>(inst.k);
    std::nth_element(candidates.begin(), candidates.begin() + target, candidates.end());
    return candidates[target];
}

Solution solve(const Instance& inst, Strategy strategy, bool want_plan,
               std::uint64_t seed) {
    Solution sol = strategy.algorithm == Algorithm::Search
                       ? search_lstar(inst, strategy.bounds, seed)
                       : select_lstar(inst, strategy.bounds, seed);
    if (want_plan) {
        std::vector<PlanEntry> plan;
        plan.reserve(inst.n());
        for (std::size_t i = 0; i < inst.n(); ++i) {
            plan.push_back({i, m_single(inst.sticks[i], sol.l_star),
                            c_single(inst.sticks[i], sol.l_star)});
        }
        sol.plan = std::move(plan);
    }
    return sol;
}

const char* to_string(Algorithm a) {
    return a == Algorithm::Search ? "search" : "select";
}

const char* to_string(Bounds b) {
    switch (b) {
        case Bounds::Quadratic: return "quadratic";
        case Bounds::Linearithmic: return "linearithmic";
        case Bounds::Sandwich: return "sandwich";
    }
    return "?";
}

std::string to_string(Strategy s) {
    return std::string(to_string(s.algorithm)) + "+" + to_string(s.bounds);
}

}  // namespace stickcut

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "stickcut/candidates.hpp"
#include "stickcut/instances.hpp"
#include "stickcut/solver.hpp"
#include "test_util.hpp"

using namespace stickcut;
using test::l_ex;
using test::make_instance;

TEST_CASE("compute_cutoff on the exemplar") {
    const CutoffResult cutoff = compute_cutoff(l_ex());
    CHECK(cutoff.cutoff == Rational(1));
    CHECK(cutoff.above == IndexSet{0, 1, 2});
    CHECK_FALSE(cutoff.early_answer.has_value());
}

TEST_CASE("compute_cutoff finds the optimum early when the cut-off is it") {
    const CutoffResult cutoff = compute_cutoff(make_instance({"4", "2", "2", "2"}, 4));
    REQUIRE(cutoff.early_answer.has_value());
    CHECK(*cutoff.early_answer == Rational(2));
}

TEST_CASE("compute_cutoff with k beyond n keeps everything") {
    const CutoffResult cutoff = compute_cutoff(make_instance({"5", "3"}, 7));
    CHECK(cutoff.cutoff == Rational());
    CHECK(cutoff.above == IndexSet{0, 1});
    CHECK_FALSE(cutoff.early_answer.has_value());
}

TEST_CASE("is_optimal_cutoff") {
    CHECK_FALSE(is_optimal_cutoff(l_ex(), Rational(1)));
    CHECK(is_optimal_cutoff(make_instance({"4", "2", "2", "2"}, 4), Rational(2)));
    CHECK(is_optimal_cutoff(l_ex(), Rational(2)));
    CHECK_THROWS_AS(is_optimal_cutoff(l_ex(), Rational()), std::domain_error);
}

TEST_CASE("quadratic restriction: denominators 1..k") {
    const Instance ex = l_ex();
    const Restriction r = restriction_quadratic(ex, compute_cutoff(ex).above);
    CHECK(r.multiset_size() == 27);
    CHECK(materialize(ex, r).size() == 27);

    const Instance primes = gen_primes(5, 3);
    const Restriction rp = restriction_quadratic(primes, compute_cutoff(primes).above);
    CHECK(rp.indices.size() == 2);
    CHECK(rp.multiset_size() == 6);

    const Instance pair = make_instance({"5", "3"}, 1);
    CHECK(restriction_quadratic(pair, IndexSet{0, 1}).multiset_size() == 2);
}

TEST_CASE("linearithmic restriction: rank-dependent caps") {
    const Instance ex = l_ex();
    const Restriction r = restriction_linearithmic(ex, compute_cutoff(ex).above);
    CHECK(r.multiset_size() == 17);

    const CandidateMultiset c = materialize(ex, r);
    std::vector<Rational> expected;
    for (int j = 1; j <= 9; ++j) expected.push_back(Rational(8, j));
    for (int j = 1; j <= 5; ++j) expected.push_back(Rational(7, j));
    for (int j = 1; j <= 3; ++j) expected.push_back(Rational(6, j));
    CHECK(c.values() == expected);
    CHECK(distinct_count(c) == 16);

    // A single surviving stick degenerates to the quadratic cap.
    const Instance single = make_instance({"6"}, 3);
    CHECK(restriction_linearithmic(single, IndexSet{0}).multiset_size() == 3);

    // Four surviving sticks at k = 6: 6 + 3 + 2 + 2 denominators.
    const Instance primes = gen_primes(5, 6);
    CHECK(restriction_linearithmic(primes, IndexSet{0, 1, 2, 3}).multiset_size() == 13);
}

TEST_CASE("linearithmic sorts by length, ties by index") {
    const Instance inst = make_instance({"3", "7", "7", "5"}, 4);
    const Restriction r = restriction_linearithmic(inst, IndexSet{0, 1, 2, 3});
    CHECK(r.indices == IndexSet{1, 2, 3, 0});
    CHECK(r.upper == std::vector<std::uint64_t>{4, 2, 2, 1});
}

TEST_CASE("sandwich interval") {
    const Instance ex = l_ex();
    const auto [lo, hi] = sandwich_interval(ex, compute_cutoff(ex));
    CHECK(lo == Rational(7, 4));
    CHECK(hi == Rational(7, 3));

    const Instance single = make_instance({"6"}, 3);
    const auto [slo, shi] = sandwich_interval(single, compute_cutoff(single));
    CHECK(slo == Rational(3, 2));
    CHECK(shi == Rational(2));
    CHECK(feasible(single, slo));

    CHECK_THROWS_AS(sandwich_interval(make_instance({"4", "4"}, 2),
                                      compute_cutoff(make_instance({"4", "4"}, 2))),
                    std::logic_error);
}

TEST_CASE("sandwich interval can be pinned by the cut-off length") {
    // Two sticks a hair above 1 plus a unit stick: the total length is small,
    // so max{L_co, Σ/(k+|I|)} resolves to L_co = 1.
    const Instance inst = make_instance({"21/10", "21/10", "1"}, 3);
    const CutoffResult cutoff = compute_cutoff(inst);
    REQUIRE_FALSE(cutoff.early_answer.has_value());
    CHECK(cutoff.cutoff == Rational(1));
    const auto [lo, hi] = sandwich_interval(inst, cutoff);
    CHECK(lo == Rational(1));
    CHECK(hi == Rational(7, 5));
    CHECK(oracle_scan(inst) == Rational(21, 20));
}

TEST_CASE("sandwich restriction on the exemplar") {
    const Instance ex = l_ex();
    const Restriction r = restriction_sandwich(ex, compute_cutoff(ex));
    CHECK(r.lower == std::vector<std::uint64_t>{4, 3, 3});
    CHECK(r.upper == std::vector<std::uint64_t>{5, 4, 4});

    const CandidateMultiset c = materialize(ex, r);
    const std::vector<Rational> expected{Rational(8, 4), Rational(8, 5), Rational(7, 3),
                                         Rational(7, 4), Rational(6, 3), Rational(6, 4)};
    CHECK(c.values() == expected);
    CHECK(c.size() == 6);
    CHECK(distinct_count(c) == 5);

    const Instance single = make_instance({"6"}, 3);
    const CandidateMultiset sc =
        materialize(single, restriction_sandwich(single, compute_cutoff(single)));
    CHECK(sc.values() == std::vector<Rational>{Rational(2), Rational(3, 2)});
}

TEST_CASE("materialize of an empty restriction") {
    CHECK(materialize(l_ex(), Restriction{}).size() == 0);
    CHECK(distinct_count(materialize(l_ex(), Restriction{})) == 0);
}

TEST_CASE("adjusted selection rank") {
    const Instance ex = l_ex();
    const CutoffResult cutoff = compute_cutoff(ex);
    CHECK(k_prime(restriction_quadratic(ex, cutoff.above), ex.k) == 9);
    CHECK(k_prime(restriction_linearithmic(ex, cutoff.above), ex.k) == 9);
    CHECK(k_prime(restriction_sandwich(ex, cutoff), ex.k) == 2);

    Restriction bad;
    bad.indices = cutoff.above;
    bad.lower = {10, 10, 10};
    bad.upper = {10, 10, 10};
    CHECK_THROWS_AS(k_prime(bad, ex.k), std::logic_error);
}

TEST_CASE("admissibility checker") {
    const Instance ex = l_ex();
    const CutoffResult cutoff = compute_cutoff(ex);
    const Rational opt = oracle_scan(ex);
    CHECK(check_admissible(ex, restriction_quadratic(ex, cutoff.above), opt));
    CHECK(check_admissible(ex, restriction_linearithmic(ex, cutoff.above), opt));
    CHECK(check_admissible(ex, restriction_sandwich(ex, cutoff), opt));

    // Forcing every denominator to 5 drops the optimum 8/4 = 2: the length
    // 8/4 is feasible, so the lower-bound condition fails.
    Restriction forced;
    forced.indices = cutoff.above;
    forced.lower = {5, 5, 5};
    forced.upper = {5, 5, 5};
    CHECK_FALSE(check_admissible(ex, forced, opt));
}

namespace {

Instance random_instance(std::mt19937_64& rng) {
    Instance inst;
    const std::size_t n = 1 + rng() % 12;
    for (std::size_t i = 0; i < n; ++i) {
        inst.sticks.push_back(Rational(1 + static_cast<long>(rng() % 60),
                                       1 + static_cast<long>(rng() % 10)));
    }
    inst.k = 1 + rng() % 15;
    return inst;
}

}  // namespace

TEST_CASE("every bounding family is admissible and contains the optimum") {
    std::mt19937_64 rng(2025);
    int checked = 0;
    for (int round = 0; round < 300; ++round) {
        const Instance inst = random_instance(rng);
        const CutoffResult cutoff = compute_cutoff(inst);
        if (cutoff.early_answer) continue;  // no restriction is formed on this path
        ++checked;
        const Rational opt = oracle_scan(inst);

        const Restriction families[] = {restriction_quadratic(inst, cutoff.above),
                                        restriction_linearithmic(inst, cutoff.above),
                                        restriction_sandwich(inst, cutoff)};
        for (const Restriction& r : families) {
            CHECK(check_admissible(inst, r, opt));
            const std::vector<Rational> values = materialize(inst, r).values();
            CHECK(std::find(values.begin(), values.end(), opt) != values.end());
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("candidate multiset size formulas") {
    std::mt19937_64 rng(2026);
    for (int round = 0; round < 300; ++round) {
        const Instance inst = random_instance(rng);
        const CutoffResult cutoff = compute_cutoff(inst);
        if (cutoff.early_answer) continue;
        const std::uint64_t survivors = cutoff.above.size();

        CHECK(restriction_quadratic(inst, cutoff.above).multiset_size() ==
              inst.k * survivors);

        std::uint64_t lin_expected = 0;
        Rational harmonic;
        for (std::uint64_t i = 1; i <= survivors; ++i) {
            lin_expected += (inst.k + i - 1) / i;
            harmonic = harmonic + Rational(1, i);
        }
        const std::uint64_t lin_size =
            restriction_linearithmic(inst, cutoff.above).multiset_size();
        CHECK(lin_size == lin_expected);
        const std::uint64_t n_prime = std::min<std::uint64_t>(inst.k, inst.n() + 1);
        CHECK(Rational(lin_size) <= Rational(n_prime) + Rational(inst.k) * harmonic);

        const std::uint64_t sandwich_size =
            restriction_sandwich(inst, cutoff).multiset_size();
        CHECK(sandwich_size >= survivors);
        CHECK(sandwich_size <= 3 * survivors);
    }
}

TEST_CASE("sandwich endpoints behave as bounds") {
    std::mt19937_64 rng(2027);
    for (int round = 0; round < 300; ++round) {
        const Instance inst = random_instance(rng);
        const CutoffResult cutoff = compute_cutoff(inst);
        if (cutoff.early_answer) continue;
        const auto [lo, hi] = sandwich_interval(inst, cutoff);
        CHECK(lo < hi);
        CHECK(feasible(inst, lo));

        // The smallest materialized value beyond the upper bound, if any,
        // must be infeasible.
        const CandidateMultiset c =
            materialize(inst, restriction_sandwich(inst, cutoff));
        const Rational* beyond = nullptr;
        for (const CandidateEntry& e : c.entries) {
            if (e.value > hi && (beyond == nullptr || e.value < *beyond)) {
                beyond = &e.value;
            }
        }
        if (beyond != nullptr) {
            CHECK_FALSE(feasible(inst, *beyond));
        }
    }
}

TEST_CASE("distinct candidates stay above a third on coprime lengths") {
    for (const std::size_t n : {5u, 10u, 20u}) {
        for (const std::uint64_t k : {2u, 3u, 10u, 30u}) {
            const Instance primes = gen_primes(n, k);
            const Rational cutoff_length =
                k <= n ? select_kth_largest(primes.sticks, k) : Rational();
            const IndexSet above = indices_above(primes, cutoff_length);
            if (above.empty()) continue;
            const CandidateMultiset c =
                materialize(primes, restriction_quadratic(primes, above));
            CHECK(3 * distinct_count(c) >= c.size());
        }
    }
}

#include <gtest/gtest.h>

#include "catalan/classnumber.hpp"
#include "catalan/criterion.hpp"
#include "catalan/errors.hpp"

namespace catalan {
namespace {

TEST(QRankUpper, Examples) {
    EXPECT_EQ(q_rank_upper(OddPrime(11), OddPrime(3)), 0u);
    EXPECT_EQ(q_rank_upper(OddPrime(23), OddPrime(3)), 1u);
    EXPECT_EQ(q_rank_upper(OddPrime(23), OddPrime(5)), 0u);
    EXPECT_EQ(q_rank_upper(OddPrime(41), OddPrime(11)), 2u);  // h^-(41) = 121
    EXPECT_THROW(q_rank_upper(OddPrime(7), OddPrime(7)), DomainError);
}

TEST(CasselsResidue, Examples) {
    EXPECT_EQ(cassels_residue(OddPrime(3), OddPrime(5)), 20u);
    EXPECT_EQ(cassels_residue(OddPrime(11), OddPrime(3)), 6u);
    EXPECT_THROW(cassels_residue(OddPrime(3), OddPrime(3)), DomainError);
}

TEST(CasselsResidue, DivisibleByQ) {
    const auto primes = odd_primes_in_range(3, 300);
    for (std::uint64_t p : primes) {
        for (std::uint64_t q : primes) {
            if (p == q) continue;
            const std::uint64_t x = cassels_residue(OddPrime(p), OddPrime(q));
            EXPECT_EQ(x % q, 0u);
            EXPECT_LT(x, q * q);
            // x = -(p^(q-1) - 1) mod q^2
            EXPECT_EQ((x + modpow(p, q - 1, q * q)) % (q * q), 1u % (q * q));
        }
    }
}

TEST(EvaluatePair, Examples) {
    const auto v11 = evaluate_pair(OddPrime(11), OddPrime(3));
    EXPECT_EQ(v11.verdict, Verdict::NoNontrivialSolution);
    EXPECT_EQ(v11.rank_threshold, 3);
    EXPECT_EQ(v11.rank_upper_bound, 0u);

    const auto v5 = evaluate_pair(OddPrime(5), OddPrime(3));
    EXPECT_EQ(v5.verdict, Verdict::Inconclusive);
    EXPECT_EQ(v5.rank_threshold, 0);

    const auto w = evaluate_pair(OddPrime(83), OddPrime(4871));
    EXPECT_EQ(w.verdict, Verdict::WieferichCase);
    EXPECT_FALSE(w.rank_upper_bound.has_value());

    // class number is not needed for a Wieferich pair beyond the cap
    EXPECT_EQ(evaluate_pair(OddPrime(2903), OddPrime(18787)).verdict, Verdict::WieferichCase);
    EXPECT_THROW(evaluate_pair(OddPrime(1013), OddPrime(3)), DomainError);
}

TEST(EvaluatePair, FirstCongruenceBlocksTheClassNumberRoute) {
    // 19 = 1 mod 9, so 9 divides 19^3 - 19 while 3^19 != 3 mod 361
    const auto r = check_pair(OddPrime(19), OddPrime(3));
    ASSERT_TRUE(r.first_holds);
    ASSERT_FALSE(r.is_double);
    const auto v = evaluate_pair(OddPrime(19), OddPrime(3));
    EXPECT_EQ(v.verdict, Verdict::Inconclusive);
}

TEST(EvaluatePair, SoundnessRecheckedFromScratch) {
    for (std::uint64_t p : odd_primes_in_range(5, 113)) {
        for (std::uint64_t q : odd_primes_in_range(3, 31)) {
            if (p == q) continue;
            const auto v = evaluate_pair(OddPrime(p), OddPrime(q));
            const auto w = check_pair(OddPrime(p), OddPrime(q));
            if (v.verdict == Verdict::NoNontrivialSolution) {
                EXPECT_FALSE(w.is_double);
                EXPECT_FALSE(w.first_holds);
                const BigInt h = h_minus_maillet(OddPrime(p));
                EXPECT_EQ(h, h_minus_analytic(OddPrime(p)));
                EXPECT_LT(static_cast<std::int64_t>(padic_val(h, q)), (static_cast<std::int64_t>(p) - 5) / 2);
                EXPECT_GE(v.rank_threshold, 1);
            }
            if (v.verdict == Verdict::WieferichCase) EXPECT_TRUE(w.is_double);
            if (p == 5) EXPECT_NE(v.verdict, Verdict::NoNontrivialSolution);
        }
    }
}

TEST(BruteSearch, TrivialSolutionsOnly) {
    const std::vector<std::uint64_t> exps{3, 5, 7};
    const auto solutions = brute_search(exps, exps, 1000, 1000, 2);
    ASSERT_EQ(solutions.size(), 18u);
    for (std::size_t i = 0; i < solutions.size(); i += 2) {
        const auto& first = solutions[i];
        const auto& second = solutions[i + 1];
        EXPECT_EQ(first.x, 0);
        EXPECT_EQ(first.y, -1);
        EXPECT_EQ(second.x, 1);
        EXPECT_EQ(second.y, 0);
        EXPECT_TRUE(first.trivial);
        EXPECT_TRUE(second.trivial);
    }
}

TEST(BruteSearch, FindsNontrivialSolutionWithEvenExponents) {
    // 3^2 - 2^3 = 1 shows the search does find nontrivial solutions.
    const std::vector<std::uint64_t> ps{2};
    const std::vector<std::uint64_t> qs{3};
    const auto solutions = brute_search(ps, qs, 10, 10);
    bool found = false;
    for (const auto& s : solutions) {
        if (s.x == 3 && s.y == 2) found = !s.trivial;
    }
    EXPECT_TRUE(found);
}

TEST(BruteSearch, RespectsYBoundAndThreadCount) {
    const std::vector<std::uint64_t> ps{2};
    const std::vector<std::uint64_t> qs{3};
    const auto bounded = brute_search(ps, qs, 10, 1);
    for (const auto& s : bounded) EXPECT_TRUE(abs(s.y) <= 1);
    EXPECT_EQ(brute_search(ps, qs, 5000, 5000, 1), brute_search(ps, qs, 5000, 5000, 4));
}

TEST(BruteSearch, AgreesWithVerdict) {
    for (std::uint64_t p : {7ULL, 11ULL, 13ULL}) {
        const auto v = evaluate_pair(OddPrime(p), OddPrime(3));
        if (v.verdict != Verdict::NoNontrivialSolution) continue;
        const std::vector<std::uint64_t> ps{p};
        const std::vector<std::uint64_t> qs{3};
        for (const auto& s : brute_search(ps, qs, 10'000, 10'000)) EXPECT_TRUE(s.trivial);
    }
}

}  // namespace
}  // namespace catalan

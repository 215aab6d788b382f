#include <random>

#include <gtest/gtest.h>

#include "catalan/classnumber.hpp"
#include "catalan/errors.hpp"
#include "oracles.hpp"

namespace catalan {
namespace {

TEST(Bareiss, MatchesRationalEliminationOnRandomMatrices) {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (auto& row : m) {
            for (auto& x : row) x = static_cast<long>(rng() % 21) - 10;
        }
        if (i % 5 == 0 && n > 1) m[0][0] = 0;       // force a pivot swap
        if (i % 7 == 0 && n > 1) m[n - 1] = m[0];   // singular
        EXPECT_EQ(bareiss_determinant(m), oracle::rational_determinant(m)) << "case " << i;
    }
}

TEST(Bareiss, EdgeCases) {
    EXPECT_EQ(bareiss_determinant({}), 1);
    EXPECT_EQ(bareiss_determinant({{BigInt(-4)}}), -4);
    EXPECT_EQ(bareiss_determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}), -1);
    EXPECT_THROW(bareiss_determinant({{BigInt(1), BigInt(2)}}), DomainError);
}

TEST(HMinus, MailletMatchesKnownTable) {
    for (const auto& [p, h] : oracle::kKnownHMinus) {
        EXPECT_EQ(h_minus_maillet(OddPrime(p)), BigInt(h)) << "p=" << p;
    }
}

TEST(HMinus, AnalyticMatchesKnownTable) {
    for (const auto& [p, h] : oracle::kKnownHMinus) {
        EXPECT_EQ(h_minus_analytic(OddPrime(p)), BigInt(h)) << "p=" << p;
    }
}

TEST(HMinus, TrivialUpTo19) {
    for (std::uint64_t p : odd_primes_in_range(3, 19)) {
        EXPECT_EQ(h_minus_maillet(OddPrime(p)), 1);
        EXPECT_EQ(h_minus_analytic(OddPrime(p)), 1);
    }
}

TEST(HMinus, AnalyticIsPrecisionIndependent) {
    const OddPrime p(131);
    const BigInt reference = h_minus_maillet(p);
    for (unsigned bits : {16u, 64u, 128u, 1024u}) EXPECT_EQ(h_minus_analytic(p, bits), reference);
}

TEST(HMinus, CrossOracleUpTo150) {
    for (std::uint64_t p : odd_primes_in_range(5, 150)) {
        const auto result = relative_class_number(OddPrime(p));
        EXPECT_TRUE(result.methods_agreed) << p;
        EXPECT_GE(result.h_minus, 1);
    }
}

TEST(HMinus, DeskScaleCap) {
    EXPECT_THROW(h_minus_maillet(OddPrime(1009)), DomainError);
    EXPECT_THROW(h_minus_analytic(OddPrime(1009)), DomainError);
}

TEST(RelativeClassNumber, MethodBookkeeping) {
    const auto maillet = relative_class_number(OddPrime(23), ClassNumberMethod::Maillet);
    EXPECT_EQ(maillet.h_minus, 3);
    EXPECT_FALSE(maillet.methods_agreed);
    EXPECT_EQ(maillet.methods_used, std::vector<ClassNumberMethod>{ClassNumberMethod::Maillet});

    const auto both = relative_class_number(OddPrime(37));
    EXPECT_EQ(both.h_minus, 37);
    EXPECT_TRUE(both.methods_agreed);
    EXPECT_EQ(both.methods_used.size(), 2u);
}

TEST(MasleyMontgomery, DomainAndNesting) {
    EXPECT_THROW(mm_bound(OddPrime(199)), DomainError);
    const Interval coarse = mm_bound(OddPrime(211), 128);
    const Interval fine = mm_bound(OddPrime(211), 256);
    EXPECT_TRUE(coarse.contains(fine));
    EXPECT_GT(coarse.lo(), Rational(h_minus_maillet(OddPrime(211))));
}

TEST(MasleyMontgomery, VerifiedExamples) {
    EXPECT_TRUE(verify_mm(OddPrime(211)));
    EXPECT_TRUE(verify_mm(OddPrime(251)));
    EXPECT_TRUE(verify_mm(OddPrime(293)));
    EXPECT_THROW(verify_mm(OddPrime(197)), DomainError);
}

}  // namespace
}  // namespace catalan

#include <random>

#include <gtest/gtest.h>

#include "catalan/errors.hpp"
#include "catalan/numeric.hpp"
#include "oracles.hpp"

namespace catalan {
namespace {

TEST(Modpow, Examples) {
    EXPECT_EQ(modpow(12345, 0, 97), 1u);
    EXPECT_EQ(modpow(2, 10, 1000), 24u);
    EXPECT_EQ(modpow(11, 3, 9), 8u);
    EXPECT_EQ(modpow(5, 0, 2), 1u);
}

TEST(Modpow, RejectsModulusBelowTwo) {
    EXPECT_THROW(modpow(3, 4, 1), DomainError);
    EXPECT_THROW(modpow(3, 4, 0), DomainError);
}

TEST(Modpow, MatchesGmpNearWordSize) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t m = (rng() | 2);
        const std::uint64_t a = rng();
        const std::uint64_t e = rng() % 100000;
        EXPECT_EQ(modpow(a, e, m), oracle::gmp_powmod(a, e, m)) << a << "^" << e << " mod " << m;
    }
}

TEST(Modpow, ExponentAdditionIsMultiplicative) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t m = 2 + rng() % 1'000'000'007ULL;
        const std::uint64_t a = rng();
        const std::uint64_t e1 = rng() % (1ULL << 40);
        const std::uint64_t e2 = rng() % (1ULL << 40);
        const auto lhs = modpow(a, e1 + e2, m);
        const auto rhs = static_cast<std::uint64_t>(
            static_cast<unsigned long long>(modpow(a, e1, m)) * modpow(a, e2, m) % m);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(IsPrime, Examples) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(4871));
    EXPECT_FALSE(is_prime(561));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100k) {
    for (std::uint64_t n = 0; n < 100'000; ++n) {
        ASSERT_EQ(is_prime(n), oracle::trial_division_is_prime(n)) << n;
    }
}

TEST(Primality, LargeInputsAreFlaggedNonCertified) {
    const BigInt mersenne_127 = (BigInt(1) << 127) - 1;
    const auto prime = primality(mersenne_127);
    EXPECT_TRUE(prime.prime);
    EXPECT_FALSE(prime.certified);

    const auto composite = primality(mersenne_127 * 3);
    EXPECT_FALSE(composite.prime);

    const auto small = primality(BigInt(4871));
    EXPECT_TRUE(small.prime);
    EXPECT_TRUE(small.certified);
}

TEST(OddPrime, Validation) {
    EXPECT_EQ(OddPrime(3).value(), 3u);
    EXPECT_THROW(OddPrime(2), DomainError);
    EXPECT_THROW(OddPrime(9), DomainError);
    EXPECT_THROW(OddPrime(1), DomainError);
}

TEST(PrimitiveRoot, Examples) {
    EXPECT_EQ(primitive_root(OddPrime(3)), 2u);
    EXPECT_EQ(primitive_root(OddPrime(7)), 3u);
    EXPECT_EQ(primitive_root(OddPrime(11)), 2u);
    EXPECT_EQ(primitive_root(OddPrime(23)), 5u);
}

TEST(PrimitiveRoot, HasFullOrderForAllPrimesBelow1000) {
    for (std::uint64_t p : odd_primes_in_range(3, 1000)) {
        const OddPrime prime(p);
        const std::uint64_t g = primitive_root(prime);
        ASSERT_GT(g, 1u);
        ASSERT_LT(g, p);
        for (std::uint64_t ell : distinct_prime_factors(p - 1)) {
            EXPECT_NE(modpow(g, (p - 1) / ell, p), 1u) << "p=" << p << " ell=" << ell;
        }
        EXPECT_EQ(oracle::walk_order(g, p), p - 1);
        for (std::uint64_t smaller = 2; smaller < g; ++smaller) {
            EXPECT_LT(oracle::walk_order(smaller, p), p - 1) << "p=" << p << " g=" << smaller;
        }
    }
}

TEST(PadicVal, Examples) {
    EXPECT_EQ(padic_val(18, 3), 2u);
    EXPECT_EQ(padic_val(7, 5), 0u);
    EXPECT_EQ(padic_val(-27, 3), 3u);
    EXPECT_THROW(padic_val(0, 3), DomainError);
}

TEST(PadicVal, RecoversPlantedExponent) {
    std::mt19937_64 rng(3);
    const std::uint64_t qs[] = {3, 5, 7, 11, 13, 101};
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t q = qs[rng() % std::size(qs)];
        const unsigned e = static_cast<unsigned>(rng() % 21);
        std::uint64_t m = 1 + rng() % 1'000'000;
        if (m % q == 0) m += 1;
        BigInt n;
        mpz_ui_pow_ui(n.get_mpz_t(), q, e);
        n *= static_cast<unsigned long>(m);
        EXPECT_EQ(padic_val(n, q), e);
    }
}

TEST(Sieve, CountsAndBounds) {
    EXPECT_EQ(primes_in_range(1, 100).size(), 25u);
    EXPECT_EQ(odd_primes_in_range(1, 100).size(), 24u);
    EXPECT_EQ(odd_primes_in_range(3, 20000).size(), 2261u);
    EXPECT_TRUE(odd_primes_in_range(24, 28).empty());
    EXPECT_EQ(odd_primes_in_range(5, 5), std::vector<std::uint64_t>{5});
}

TEST(Isqrt, Boundaries) {
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(65125885), 8070u);
    EXPECT_EQ(isqrt(8200ULL * 8200ULL), 8200u);
    EXPECT_EQ(isqrt(8200ULL * 8200ULL - 1), 8199u);
    EXPECT_EQ(isqrt(~0ULL), 4294967295u);
}

}  // namespace
}  // namespace catalan

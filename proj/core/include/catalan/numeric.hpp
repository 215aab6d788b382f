#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace catalan {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num / den in lowest terms.
inline Rational make_rational(long num, long den) {
    Rational r{BigInt(num), BigInt(den)};
    r.canonicalize();
    return r;
}

/// base^exp mod modulus by square-and-multiply. Throws DomainError if modulus < 2.
std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

struct Primality {
    bool prime = false;
    /// false when n >= 2^64 and the answer comes from probabilistic rounds.
    bool certified = true;
};

/// Arbitrary-size primality. Inputs below 2^64 are decided exactly; larger
/// inputs get 64 Miller-Rabin rounds with bases drawn from a fixed seed.
Primality primality(const BigInt& n);

/// An odd prime, validated on construction.
class OddPrime {
public:
    /// Throws DomainError unless value >= 3 is prime.
    explicit OddPrime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    operator std::uint64_t() const noexcept { return value_; }

    friend bool operator==(OddPrime, OddPrime) = default;
    friend auto operator<=>(OddPrime, OddPrime) = default;

private:
    std::uint64_t value_;
};

/// Distinct prime factors of n in increasing order (trial division).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Multiplicative order of a modulo the prime p; a must be a unit.
std::uint64_t multiplicative_order(std::uint64_t a, OddPrime p);

bool is_primitive_root(std::uint64_t g, OddPrime p);

/// Smallest primitive root of p.
std::uint64_t primitive_root(OddPrime p);

/// Largest e with q^e | n. Throws DomainError for n = 0 or q < 2.
unsigned padic_val(const BigInt& n, std::uint64_t q);

/// Primes in [lo, hi]; sieves up to hi.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Odd primes in [lo, hi].
std::vector<std::uint64_t> odd_primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

}  // namespace catalan

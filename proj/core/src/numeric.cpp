#include "catalan/numeric.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_unchecked(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// n - 1 = d * 2^s with d odd; true if a is not a witness for compositeness.
bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod_unchecked(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
    if (modulus < 2) throw DomainError("modpow: modulus must be at least 2");
    return powmod_unchecked(base, exp, modulus);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

Primality primality(const BigInt& n) {
    if (n < 2) return {false, true};
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        std::uint64_t v = 0;
        mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
        return {is_prime(v), true};
    }
    for (std::uint64_t p : kWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, true};
    }

    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    const BigInt n_minus_1 = n - 1;
    std::mt19937_64 rng(0x5eed'ca7a'1a11ULL);
    gmp_randclass bases(gmp_randinit_default);
    bases.seed(rng());
    for (int round = 0; round < 64; ++round) {
        BigInt a = bases.get_z_range(n - 3) + 2;
        BigInt x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return {false, true};
    }
    return {true, false};
}

OddPrime::OddPrime(std::uint64_t value) : value_(value) {
    if (value < 3 || !is_prime(value)) {
        throw DomainError(std::to_string(value) + " is not an odd prime");
    }
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

std::uint64_t multiplicative_order(std::uint64_t a, OddPrime p) {
    if (a % p == 0) throw DomainError("multiplicative_order: argument is not a unit");
    std::uint64_t order = p - 1;
    for (std::uint64_t ell : distinct_prime_factors(p - 1)) {
        while (order % ell == 0 && powmod_unchecked(a, order / ell, p) == 1) order /= ell;
    }
    return order;
}

bool is_primitive_root(std::uint64_t g, OddPrime p) {
    if (g % p == 0) return false;
    for (std::uint64_t ell : distinct_prime_factors(p - 1)) {
        if (powmod_unchecked(g, (p - 1) / ell, p) == 1) return false;
    }
    return true;
}

std::uint64_t primitive_root(OddPrime p) {
    for (std::uint64_t g = 2; g < p; ++g) {
        if (is_primitive_root(g, p)) return g;
    }
    // every prime has a primitive root
    throw InternalError("primitive_root: none found for " + std::to_string(p.value()));
}

unsigned padic_val(const BigInt& n, std::uint64_t q) {
    if (n == 0) throw DomainError("padic_val: valuation of 0 is infinite");
    if (q < 2) throw DomainError("padic_val: base must be at least 2");
    BigInt m = abs(n);
    const BigInt base(std::to_string(q));
    return static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), base.get_mpz_t()));
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> primes;
    if (hi < 2 || lo > hi) return primes;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
        if (!composite[i]) primes.push_back(i);
    }
    return primes;
}

std::vector<std::uint64_t> odd_primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    return primes_in_range(std::max<std::uint64_t>(lo, 3), hi);
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace catalan

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "catalan/numeric.hpp"

namespace catalan {

/// Element of Z[zeta_p] in canonical form over the power basis
/// 1, zeta, ..., zeta^(p-2).
///
/// Because this is a Z-basis, equality is coefficient-wise equality and an
/// integer n divides an element iff it divides every coefficient.
class CycInt {
public:
    explicit CycInt(OddPrime p);  // zero

    /// Takes an already-canonical coefficient vector of length p - 1.
    CycInt(OddPrime p, std::vector<BigInt> coeffs);

    static CycInt one(OddPrime p);
    static CycInt constant(OddPrime p, const BigInt& value);
    /// zeta^k for any integer k (reduced mod p).
    static CycInt zeta_power(OddPrime p, std::int64_t k);

    OddPrime prime() const noexcept { return p_; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
    bool is_zero() const;

    CycInt& operator+=(const CycInt& other);
    CycInt& operator-=(const CycInt& other);
    CycInt& operator*=(const BigInt& scalar);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const BigInt& n) { return a *= n; }
    friend CycInt operator*(const BigInt& n, CycInt a) { return a *= n; }
    friend CycInt operator-(CycInt a);
    /// Ring product; throws DomainError when the primes differ.
    friend CycInt operator*(const CycInt& a, const CycInt& b);

    friend bool operator==(const CycInt& a, const CycInt& b) = default;

private:
    void require_same_field(const CycInt& other) const;

    OddPrime p_;
    std::vector<BigInt> coeffs_;
};

/// Reduces an integer polynomial (raw[i] multiplies X^i, any length) modulo
/// Phi_p: exponents are folded mod p, then X^(p-1) = -(1 + X + ... + X^(p-2)).
CycInt reduce_canonical(std::span<const BigInt> raw, OddPrime p);

CycInt mul(const CycInt& a, const CycInt& b);

CycInt pow(const CycInt& base, unsigned exponent);

/// The automorphism zeta -> zeta^k of Q(zeta_p), 1 <= k <= p - 1.
class GaloisElement {
public:
    /// Throws DomainError unless 1 <= k <= p - 1.
    GaloisElement(OddPrime p, std::uint64_t k);

    static GaloisElement identity(OddPrime p) { return {p, 1}; }
    /// zeta -> zeta^-1.
    static GaloisElement conjugation(OddPrime p) { return {p, p - 1}; }

    OddPrime prime() const noexcept { return p_; }
    std::uint64_t exponent() const noexcept { return k_; }

    /// (this * other)(x) = this(other(x)); exponents multiply mod p.
    GaloisElement operator*(const GaloisElement& other) const;
    GaloisElement power(std::uint64_t n) const;

    friend bool operator==(const GaloisElement&, const GaloisElement&) = default;

private:
    OddPrime p_;
    std::uint64_t k_;
};

/// Throws DomainError when the primes differ.
CycInt galois_apply(const GaloisElement& s, const CycInt& x);

inline CycInt conj(const CycInt& x) { return galois_apply(GaloisElement::conjugation(x.prime()), x); }

/// n | x in Z[zeta_p]. Throws DomainError for n < 2.
bool divisible_by_int(const CycInt& x, const BigInt& n);

/// Data for the closing kernel argument: a primitive root g of p and integer
/// coefficients a_0..a_r (r = a.size() - 1).
struct LemmaInstance {
    OddPrime p;
    std::uint64_t g;
    std::vector<BigInt> a;

    std::size_t r() const { return a.size() - 1; }
};

/// Exponent/sign pairs of the un-reduced element: for each i, +a_i at
/// (-g^i mod p) and -a_i at (g^i mod p).
struct SupportTerm {
    std::uint64_t exponent;
    BigInt coefficient;
};
std::vector<SupportTerm> lemma_support(const LemmaInstance& inst);

/// Canonical form of sum_i a_i (zeta^(-g^i) - zeta^(g^i)).
/// Throws DomainError if a is empty or r > p - 2.
CycInt lemma_element(const LemmaInstance& inst);

/// True iff the 2r + 2 residues {+-g^i mod p : 0 <= i <= r} are pairwise distinct.
bool exponents_distinct(OddPrime p, std::uint64_t g, std::uint64_t r);

/// Checks, on this instance, that q divides lemma_element(inst) exactly when
/// q divides every a_i.
///
/// Throws DomainError if q == p, g is not a primitive root of p, or
/// r > (p - 5) / 2 (outside the regime where the claim is made).
bool kernel_check(const LemmaInstance& inst, OddPrime q);

/// Verifies (1 - xS) - conj(1 - xS) == -x (S - conj S) in Z[zeta_p] with
/// S = sum_i a_i zeta^(-g^i). Throws DomainError if inst.p != p.
bool subtraction_identity(OddPrime p, const BigInt& x, const LemmaInstance& inst);

/// Sampled check that q | alpha - beta  <=>  q | alpha^q - beta^q, and that the
/// forward direction lifts to q^2 | alpha^q - beta^q. Half the trials force
/// beta = alpha + q*gamma so the lifting branch is exercised.
/// Throws DomainError if q == p (p is ramified).
bool frobenius_lift_check(OddPrime p, OddPrime q, std::uint64_t trials, std::uint64_t seed);

/// Element with coefficients uniform in [-bound, bound].
CycInt random_cycint(OddPrime p, std::int64_t bound, std::mt19937_64& rng);

}  // namespace catalan

#include "catalan/cyclotomic.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "catalan/errors.hpp"

namespace catalan {

CycInt::CycInt(OddPrime p) : p_(p), coeffs_(p - 1) {}

CycInt::CycInt(OddPrime p, std::vector<BigInt> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != p - 1) {
        throw DomainError("CycInt: expected " + std::to_string(p - 1) + " canonical coefficients, got " +
                          std::to_string(coeffs_.size()));
    }
}

CycInt CycInt::one(OddPrime p) { return constant(p, 1); }

CycInt CycInt::constant(OddPrime p, const BigInt& value) {
    CycInt out(p);
    out.coeffs_[0] = value;
    return out;
}

CycInt CycInt::zeta_power(OddPrime p, std::int64_t k) {
    const auto prime = static_cast<std::int64_t>(p.value());
    const auto e = static_cast<std::size_t>(((k % prime) + prime) % prime);
    std::vector<BigInt> raw(p);
    raw[e] = 1;
    return reduce_canonical(raw, p);
}

bool CycInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

void CycInt::require_same_field(const CycInt& other) const {
    if (p_ != other.p_) {
        throw DomainError("CycInt: mixing Z[zeta_" + std::to_string(p_.value()) + "] and Z[zeta_" +
                          std::to_string(other.p_.value()) + "]");
    }
}

CycInt& CycInt::operator+=(const CycInt& other) {
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

CycInt operator-(CycInt a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.require_same_field(b);
    const std::size_t n = a.coeffs_.size();
    std::vector<BigInt> raw(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_addmul(raw[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return reduce_canonical(raw, a.p_);
}

CycInt reduce_canonical(std::span<const BigInt> raw, OddPrime p) {
    std::vector<BigInt> folded(p);
    for (std::size_t i = 0; i < raw.size(); ++i) folded[i % p] += raw[i];
    const BigInt top = folded[p - 1];
    folded.pop_back();
    if (top != 0) {
        for (auto& c : folded) c -= top;
    }
    return CycInt(p, std::move(folded));
}

CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt pow(const CycInt& base, unsigned exponent) {
    CycInt result = CycInt::one(base.prime());
    CycInt square = base;
    while (exponent > 0) {
        if (exponent & 1) result = result * square;
        exponent >>= 1;
        if (exponent > 0) square = square * square;
    }
    return result;
}

// ---------------------------------------------------------------------------

GaloisElement::GaloisElement(OddPrime p, std::uint64_t k) : p_(p), k_(k) {
    if (k < 1 || k > p - 1) {
        throw DomainError("GaloisElement: exponent " + std::to_string(k) + " outside [1, p-1]");
    }
}

GaloisElement GaloisElement::operator*(const GaloisElement& other) const {
    if (p_ != other.p_) throw DomainError("GaloisElement: different primes");
    return {p_, k_ % p_ * (other.k_ % p_) % p_};
}

GaloisElement GaloisElement::power(std::uint64_t n) const { return {p_, modpow(k_, n, p_)}; }

CycInt galois_apply(const GaloisElement& s, const CycInt& x) {
    if (s.prime() != x.prime()) throw DomainError("galois_apply: different primes");
    const OddPrime p = x.prime();
    std::vector<BigInt> raw(p);
    const auto coeffs = x.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        raw[(i * s.exponent()) % p] += coeffs[i];
    }
    return reduce_canonical(raw, p);
}

bool divisible_by_int(const CycInt& x, const BigInt& n) {
    if (n < 2) throw DomainError("divisible_by_int: divisor must be at least 2");
    return std::all_of(x.coeffs().begin(), x.coeffs().end(), [&](const BigInt& c) {
        return mpz_divisible_p(c.get_mpz_t(), n.get_mpz_t()) != 0;
    });
}

// ---------------------------------------------------------------------------

std::vector<SupportTerm> lemma_support(const LemmaInstance& inst) {
    const OddPrime p = inst.p;
    if (inst.a.empty()) throw DomainError("lemma: coefficient vector is empty");
    if (inst.r() > p - 2) throw DomainError("lemma: r exceeds p - 2");
    if (inst.g % p == 0) throw DomainError("lemma: g must be a unit mod p");

    std::vector<SupportTerm> terms;
    terms.reserve(2 * inst.a.size());
    std::uint64_t power = 1;  // g^i mod p
    for (const BigInt& ai : inst.a) {
        terms.push_back({(p - power) % p, ai});
        terms.push_back({power, -ai});
        power = power * inst.g % p;
    }
    return terms;
}

CycInt lemma_element(const LemmaInstance& inst) {
    std::vector<BigInt> raw(inst.p);
    for (const auto& term : lemma_support(inst)) raw[term.exponent] += term.coefficient;
    return reduce_canonical(raw, inst.p);
}

bool exponents_distinct(OddPrime p, std::uint64_t g, std::uint64_t r) {
    if (g <= 1 || g >= p) throw DomainError("exponents_distinct: need 1 < g < p");
    if (2 * r + 2 > p - 1) return false;  // more residues than units
    std::set<std::uint64_t> seen;
    std::uint64_t power = 1;
    for (std::uint64_t i = 0; i <= r; ++i) {
        if (!seen.insert(power).second || !seen.insert(p - power).second) return false;
        power = power * g % p;
    }
    return true;
}

bool kernel_check(const LemmaInstance& inst, OddPrime q) {
    const OddPrime p = inst.p;
    if (q == p) throw DomainError("kernel_check: q must differ from p");
    if (inst.g <= 1 || inst.g >= p || !is_primitive_root(inst.g, p)) {
        throw DomainError("kernel_check: " + std::to_string(inst.g) + " is not a primitive root of " +
                          std::to_string(p.value()));
    }
    if (inst.a.empty() || p < 5 || inst.r() > (p - 5) / 2) {
        throw DomainError("kernel_check: r must satisfy 0 <= r <= (p-5)/2");
    }

    const BigInt modulus(static_cast<unsigned long>(q.value()));
    const bool element_divisible = divisible_by_int(lemma_element(inst), modulus);
    const bool all_coefficients_divisible = std::all_of(inst.a.begin(), inst.a.end(), [&](const BigInt& ai) {
        return mpz_divisible_p(ai.get_mpz_t(), modulus.get_mpz_t()) != 0;
    });
    return element_divisible == all_coefficients_divisible;
}

bool subtraction_identity(OddPrime p, const BigInt& x, const LemmaInstance& inst) {
    if (inst.p != p) throw DomainError("subtraction_identity: instance is over a different prime");
    CycInt s(p);
    std::uint64_t power = 1;
    for (const BigInt& ai : inst.a) {
        s += CycInt::zeta_power(p, -static_cast<std::int64_t>(power)) * ai;
        power = power * inst.g % p;
    }
    const CycInt one_minus_xs = CycInt::one(p) - s * x;
    const CycInt lhs = one_minus_xs - conj(one_minus_xs);
    const CycInt rhs = (s - conj(s)) * BigInt(-x);
    return lhs == rhs;
}

CycInt random_cycint(OddPrime p, std::int64_t bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    std::vector<BigInt> coeffs(p - 1);
    for (auto& c : coeffs) c = static_cast<long>(dist(rng));
    return CycInt(p, std::move(coeffs));
}

bool frobenius_lift_check(OddPrime p, OddPrime q, std::uint64_t trials, std::uint64_t seed) {
    if (q == p) throw DomainError("frobenius_lift_check: q = p is ramified");
    std::mt19937_64 rng(seed);
    const auto bound = static_cast<std::int64_t>(10 * q.value());
    const BigInt q1(static_cast<unsigned long>(q.value()));
    const BigInt q2 = q1 * q1;

    for (std::uint64_t t = 0; t < trials; ++t) {
        const CycInt alpha = random_cycint(p, bound, rng);
        const CycInt beta = (t % 2 == 0) ? alpha + random_cycint(p, bound, rng) * q1
                                         : random_cycint(p, bound, rng);
        const CycInt diff = pow(alpha, static_cast<unsigned>(q.value())) -
                            pow(beta, static_cast<unsigned>(q.value()));
        const bool congruent = divisible_by_int(alpha - beta, q1);
        if (congruent && !divisible_by_int(diff, q2)) return false;
        if (!congruent && divisible_by_int(diff, q1)) return false;
    }
    return true;
}

}  // namespace catalan

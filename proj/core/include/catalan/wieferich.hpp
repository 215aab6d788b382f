#pragma once

#include <cstdint>
#include <vector>

#include "catalan/numeric.hpp"

namespace catalan {

struct WieferichReport {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t pq_residue = 0;  // p^q mod q^2
    std::uint64_t qp_residue = 0;  // q^p mod p^2
    bool first_holds = false;      // p^q == p (mod q^2)
    bool second_holds = false;     // q^p == q (mod p^2)
    bool is_double = false;
    // Fermat-quotient forms p^(q-1) == 1 (mod q^2), q^(p-1) == 1 (mod p^2).
    bool first_fermat_form = false;
    bool second_fermat_form = false;

    friend bool operator==(const WieferichReport&, const WieferichReport&) = default;
};

/// Both congruences for the pair. Throws DomainError if p == q or either
/// prime is >= 2^32 (q^2 must fit in 64 bits), and InternalError if the two
/// equivalent forms of a congruence disagree.
WieferichReport check_pair(OddPrime p, OddPrime q);

struct PrimeRange {
    std::uint64_t lo;
    std::uint64_t hi;
};

/// All double-Wieferich pairs with p in p_range, q in q_range, p != q, sorted
/// by (p, q). Work is split into blocks of q across `threads` workers; the
/// result does not depend on the thread count. Throws DomainError on an empty
/// range.
std::vector<WieferichReport> search_pairs(PrimeRange p_range, PrimeRange q_range, unsigned threads = 1);

}  // namespace catalan

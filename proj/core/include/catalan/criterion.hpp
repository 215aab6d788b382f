#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catalan/numeric.hpp"
#include "catalan/wieferich.hpp"

namespace catalan {

enum class Verdict { NoNontrivialSolution, WieferichCase, Inconclusive };

const char* to_string(Verdict verdict);

struct CriterionVerdict {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    WieferichReport wieferich;
    std::int64_t rank_threshold = 0;  // (p - 5) / 2
    /// v_q(h^-(p)); absent when the class-number branch was not consulted.
    std::optional<unsigned> rank_upper_bound;
    std::optional<BigInt> h_minus;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
};

/// v_q(h^-(p)), an upper bound for the q-rank of the relative class group.
/// Uses both class-number algorithms. Throws DomainError if p == q.
unsigned q_rank_upper(OddPrime p, OddPrime q);

/// (-(p^(q-1) - 1)) mod q^2, the residue any solution x must have. Throws
/// DomainError if p == q and InternalError if the result is not divisible by q.
std::uint64_t cassels_residue(OddPrime p, OddPrime q);

/// Applies the criterion to one orientation of the pair:
///   - double-Wieferich pair                        -> WieferichCase
///   - q^2 does not divide p^q - p and
///     v_q(h^-(p)) < (p-5)/2 with (p-5)/2 >= 1      -> NoNontrivialSolution
///   - anything else                                -> Inconclusive
/// Throws DomainError if the class number is needed and p exceeds the
/// desk-scale cap.
CriterionVerdict evaluate_pair(OddPrime p, OddPrime q);

struct Solution {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    BigInt x;
    BigInt y;
    bool trivial = false;  // x * y == 0

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Every integer solution of x^p - y^q = 1 with |x| <= x_max, |y| <= y_max,
/// for each p in p_set and q in q_set. For each x the candidate y is found by
/// an exact integer q-th root of x^p - 1. Sorted by (p, q, x).
std::vector<Solution> brute_search(std::span<const std::uint64_t> p_set, std::span<const std::uint64_t> q_set,
                                   std::uint64_t x_max, std::uint64_t y_max, unsigned threads = 1);

}  // namespace catalan

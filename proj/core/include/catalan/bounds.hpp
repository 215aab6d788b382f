#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catalan/interval.hpp"
#include "catalan/numeric.hpp"

namespace catalan {

/// Lower bound on q taken as an input constant (q > 10^5).
inline constexpr std::uint64_t kQLowerBound = 100001;

/// One certified comparison in the deduction.
struct BoundsStep {
    std::string description;
    Interval lhs;
    std::string relation;  // "<", ">" or "="
    Interval rhs;
    bool holds = false;
    unsigned precision_bits = 0;
};

struct BoundsReport {
    std::vector<BoundsStep> steps;
    std::uint64_t p_star = 0;   // certified: p <= p_star
    std::uint64_t q_upper = 0;  // certified: q <= q_upper
    std::uint64_t q_lower = kQLowerBound;
    /// True iff every step holds and q_upper < q_lower.
    bool contradiction = false;
    std::vector<std::string> notes;
};

/// Largest integer q >= 2 with q^((p-5)/2) <= (2 pi)^(-p/2) p^((p+31)/4), or 1
/// if even q = 2 fails. Each side of the boundary is a certified comparison.
/// Throws DomainError for p <= 200.
std::uint64_t max_q_from_classbound(OddPrime p, unsigned precision_bits = kDefaultPrecisionBits);

/// 2.77 q ln q (ln p - ln ln q + 2.33)^2. Throws DomainError for q < 3000 or p < 1.
Expr mignotte_roy_expr(const BigInt& p, const BigInt& q);
Interval mignotte_roy_rhs(const BigInt& p, const BigInt& q, unsigned precision_bits = kDefaultPrecisionBits);

/// Least integer P such that every integer p > P satisfies p > c (ln p)^k.
///
/// p > c (ln p)^k  <=>  t - k ln t > ln c  with t = ln p, and the left side is
/// increasing for t > k, so above e^k the sign changes once and is located by
/// certified integer bisection. Below e^k the left side decreases, so only the
/// integer just under e^k needs checking. Throws DomainError for c < 0 or k < 1.
std::uint64_t fixed_point_bound(const Rational& c = make_rational(192, 100), unsigned k = 6,
                                unsigned precision_bits = kDefaultPrecisionBits);

/// The full deduction from the class-number and Mignotte-Roy bounds down to
/// q < sqrt(p) < 8200, against q > 10^5.
BoundsReport contradiction_chain(unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace catalan

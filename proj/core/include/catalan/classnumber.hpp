#pragma once

#include <cstdint>
#include <vector>

#include "catalan/interval.hpp"
#include "catalan/numeric.hpp"

namespace catalan {

/// Largest p accepted by the exact class-number routines.
inline constexpr std::uint64_t kClassNumberMaxPrime = 1000;

enum class ClassNumberMethod { Maillet, Analytic, Both };

struct ClassNumberResult {
    std::uint64_t p = 0;
    BigInt h_minus;
    /// Both methods ran and returned the same value.
    bool methods_agreed = false;
    std::vector<ClassNumberMethod> methods_used;
};

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting. All intermediate divisions are exact.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// h^-(p) as |det M| / p^((p-3)/2), M[a][b] = least positive residue of
/// a * b^-1 mod p for 1 <= a, b <= (p-1)/2. Returns 1 for p = 3.
///
/// Throws DomainError above kClassNumberMaxPrime and InternalError if the
/// division by p^((p-3)/2) is not exact.
BigInt h_minus_maillet(OddPrime p);

/// h^-(p) = 2p * prod over odd characters chi of (-B_{1,chi} / 2), evaluated
/// in floating point with MPFR and rounded to the nearest integer.
///
/// The rounding is accepted only when the working precision exceeds the bit
/// length of the result by a guard margin and the value lies within 1/4 of an
/// integer; otherwise precision doubles. Throws InconclusivePrecision past
/// kMaxPrecisionBits.
BigInt h_minus_analytic(OddPrime p, unsigned precision_bits = kDefaultPrecisionBits);

/// Runs the requested method(s); with Both, a disagreement is an InternalError.
ClassNumberResult relative_class_number(OddPrime p, ClassNumberMethod method = ClassNumberMethod::Both,
                                        unsigned precision_bits = kDefaultPrecisionBits);

/// (2 pi)^(-p/2) * p^((p+31)/4) as an expression. Throws DomainError for p <= 200.
Expr mm_bound_expr(OddPrime p);

/// Rigorous enclosure of the class-number upper bound valid for p > 200.
Interval mm_bound(OddPrime p, unsigned precision_bits = kDefaultPrecisionBits);

/// Certifies h^-(p) < (2 pi)^(-p/2) p^((p+31)/4) with the exact class number.
bool verify_mm(OddPrime p, unsigned precision_bits = kDefaultPrecisionBits);

const char* to_string(ClassNumberMethod method);

}  // namespace catalan

#include "catalan/classnumber.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "catalan/errors.hpp"
#include "mpfr_real.hpp"

namespace catalan {

using detail::MpfrReal;

namespace {

void require_desk_scale(OddPrime p) {
    if (p > kClassNumberMaxPrime) {
        throw DomainError("class number of p = " + std::to_string(p.value()) + " exceeds the limit p <= " +
                          std::to_string(kClassNumberMaxPrime));
    }
}

std::size_t bit_length(const BigInt& n) { return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2); }

// One attempt at `bits` of working precision. Returns the rounded value and
// whether the result is trustworthy at this precision.
std::pair<BigInt, bool> analytic_attempt(OddPrime p, unsigned bits) {
    const std::uint64_t n = p - 1;  // order of the character group
    const std::uint64_t g = primitive_root(p);

    std::vector<unsigned long> g_powers(n);
    g_powers[0] = 1;
    for (std::uint64_t k = 1; k < n; ++k) g_powers[k] = g_powers[k - 1] * g % p;

    // omega^m = exp(2 pi i m / (p-1))
    std::vector<MpfrReal> cosines;
    std::vector<MpfrReal> sines;
    cosines.reserve(n);
    sines.reserve(n);
    MpfrReal angle(bits);
    MpfrReal step(bits);
    mpfr_const_pi(step.get(), MPFR_RNDN);
    mpfr_mul_ui(step.get(), step.get(), 2, MPFR_RNDN);
    mpfr_div_ui(step.get(), step.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    for (std::uint64_t m = 0; m < n; ++m) {
        mpfr_mul_ui(angle.get(), step.get(), static_cast<unsigned long>(m), MPFR_RNDN);
        cosines.emplace_back(bits);
        sines.emplace_back(bits);
        mpfr_sin_cos(sines.back().get(), cosines.back().get(), angle.get(), MPFR_RNDN);
    }

    MpfrReal product(bits);
    mpfr_set_ui(product.get(), 1, MPFR_RNDN);
    MpfrReal re(bits);
    MpfrReal im(bits);
    MpfrReal term(bits);
    const unsigned long denom = 2 * static_cast<unsigned long>(p.value());

    // chi_j(g^k) = omega^(jk); odd characters are j odd. chi_j and chi_(n-j)
    // are conjugate, so each pair contributes |B_{1,chi_j} / 2|^2 and the
    // quadratic character (j = n/2, when odd) contributes -B_{1,chi} / 2.
    for (std::uint64_t j = 1; j <= n / 2; j += 2) {
        mpfr_set_ui(re.get(), 0, MPFR_RNDN);
        mpfr_set_ui(im.get(), 0, MPFR_RNDN);
        for (std::uint64_t k = 0; k < n; ++k) {
            const std::uint64_t m = j * k % n;
            mpfr_mul_ui(term.get(), cosines[m].get(), g_powers[k], MPFR_RNDN);
            mpfr_add(re.get(), re.get(), term.get(), MPFR_RNDN);
            mpfr_mul_ui(term.get(), sines[m].get(), g_powers[k], MPFR_RNDN);
            mpfr_add(im.get(), im.get(), term.get(), MPFR_RNDN);
        }
        // -B_{1,chi} / 2 = -S / (2p)
        mpfr_div_ui(re.get(), re.get(), denom, MPFR_RNDN);
        mpfr_div_ui(im.get(), im.get(), denom, MPFR_RNDN);
        if (2 * j == n) {
            mpfr_neg(term.get(), re.get(), MPFR_RNDN);
        } else {
            mpfr_sqr(term.get(), re.get(), MPFR_RNDN);
            mpfr_fma(term.get(), im.get(), im.get(), term.get(), MPFR_RNDN);
        }
        mpfr_mul(product.get(), product.get(), term.get(), MPFR_RNDN);
    }
    mpfr_mul_ui(product.get(), product.get(), denom, MPFR_RNDN);

    BigInt rounded;
    mpfr_get_z(rounded.get_mpz_t(), product.get(), MPFR_RNDN);
    MpfrReal distance(bits);
    mpfr_sub_z(distance.get(), product.get(), rounded.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(distance.get(), distance.get(), MPFR_RNDN);

    const std::size_t guard = 2 * bit_length(BigInt(static_cast<unsigned long>(p.value()))) + 32;
    const bool enough_bits = bits >= bit_length(rounded) + guard;
    const bool near_integer = mpfr_cmp_d(distance.get(), 0.25) < 0;
    return {rounded, enough_bits && near_integer && rounded >= 1};
}

}  // namespace

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw DomainError("bareiss_determinant: matrix is not square");
    }
    if (n == 0) return 1;

    int sign = 1;
    BigInt previous_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(k) + 1, m.end(),
                                   [k](const auto& row) { return row[k] != 0; });
            if (it == m.end()) return 0;
            std::swap(m[k], *it);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt& entry = m[i][j];
                entry *= m[k][k];
                mpz_submul(entry.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), previous_pivot.get_mpz_t());
            }
        }
        previous_pivot = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt h_minus_maillet(OddPrime p) {
    require_desk_scale(p);
    if (p == 3) return 1;

    const std::uint64_t half = (p - 1) / 2;
    std::vector<std::vector<BigInt>> matrix(half, std::vector<BigInt>(half));
    for (std::uint64_t b = 1; b <= half; ++b) {
        const std::uint64_t b_inv = modpow(b, p - 2, p);
        for (std::uint64_t a = 1; a <= half; ++a) {
            matrix[a - 1][b - 1] = static_cast<unsigned long>(a * b_inv % p);
        }
    }

    BigInt det = abs(bareiss_determinant(std::move(matrix)));
    BigInt p_power;
    mpz_ui_pow_ui(p_power.get_mpz_t(), p, (p - 3) / 2);
    if (!mpz_divisible_p(det.get_mpz_t(), p_power.get_mpz_t())) {
        throw InternalError("Maillet determinant for p = " + std::to_string(p.value()) +
                            " is not divisible by p^((p-3)/2)");
    }
    mpz_divexact(det.get_mpz_t(), det.get_mpz_t(), p_power.get_mpz_t());
    if (det == 0) throw InternalError("Maillet determinant vanished for p = " + std::to_string(p.value()));
    return det;
}

BigInt h_minus_analytic(OddPrime p, unsigned precision_bits) {
    require_desk_scale(p);
    if (p == 3) return 1;
    for (unsigned bits = std::max(precision_bits, 64u);; bits *= 2) {
        auto [value, ok] = analytic_attempt(p, std::min(bits, kMaxPrecisionBits));
        if (ok) return value;
        if (bits >= kMaxPrecisionBits) {
            throw InconclusivePrecision("analytic class number for p = " + std::to_string(p.value()) +
                                        " not certified at " + std::to_string(kMaxPrecisionBits) + " bits");
        }
    }
}

ClassNumberResult relative_class_number(OddPrime p, ClassNumberMethod method, unsigned precision_bits) {
    ClassNumberResult result;
    result.p = p;
    switch (method) {
        case ClassNumberMethod::Maillet:
            result.h_minus = h_minus_maillet(p);
            result.methods_used = {ClassNumberMethod::Maillet};
            break;
        case ClassNumberMethod::Analytic:
            result.h_minus = h_minus_analytic(p, precision_bits);
            result.methods_used = {ClassNumberMethod::Analytic};
            break;
        case ClassNumberMethod::Both: {
            BigInt maillet = h_minus_maillet(p);
            BigInt analytic = h_minus_analytic(p, precision_bits);
            if (maillet != analytic) {
                throw InternalError("class number disagreement for p = " + std::to_string(p.value()) +
                                    ": Maillet " + maillet.get_str() + ", analytic " + analytic.get_str());
            }
            result.h_minus = std::move(maillet);
            result.methods_agreed = true;
            result.methods_used = {ClassNumberMethod::Maillet, ClassNumberMethod::Analytic};
            break;
        }
    }
    return result;
}

Expr mm_bound_expr(OddPrime p) {
    if (p <= 200) {
        throw DomainError("class-number upper bound only holds for p > 200, got " + std::to_string(p.value()));
    }
    const long pv = static_cast<long>(p.value());
    const Expr log_p = log(Expr(pv));
    const Expr log_two_pi = log(Expr(2) * Expr::pi());
    return exp(Expr(make_rational(pv + 31, 4)) * log_p - Expr(make_rational(pv, 2)) * log_two_pi);
}

Interval mm_bound(OddPrime p, unsigned precision_bits) { return mm_bound_expr(p).eval(precision_bits); }

bool verify_mm(OddPrime p, unsigned precision_bits) {
    const Expr bound = mm_bound_expr(p);
    const BigInt h = relative_class_number(p, ClassNumberMethod::Both, precision_bits).h_minus;
    return certified_less(Expr(h), bound, precision_bits);
}

const char* to_string(ClassNumberMethod method) {
    switch (method) {
        case ClassNumberMethod::Maillet: return "maillet";
        case ClassNumberMethod::Analytic: return "analytic";
        case ClassNumberMethod::Both: return "both";
    }
    return "unknown";
}

}  // namespace catalan

#include "catalan/bounds.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "catalan/classnumber.hpp"
#include "catalan/errors.hpp"

namespace catalan {

namespace {

Expr integer(std::uint64_t n) { return Expr(BigInt(static_cast<unsigned long>(n))); }

// Equality of two exact rationals; no rounding involved.
BoundsStep exact_step(std::string description, const Rational& lhs, const Rational& rhs, unsigned bits) {
    return {std::move(description), Interval::exact(lhs, bits), "=", Interval::exact(rhs, bits), lhs == rhs, bits};
}

BoundsStep certified_step(std::string description, const Expr& lhs, std::string relation, const Expr& rhs,
                          unsigned bits) {
    BoundsStep step{std::move(description), lhs.eval(bits), std::move(relation), rhs.eval(bits), false, bits};
    Comparison cmp = certified_compare(lhs, rhs, bits);
    step.lhs = std::move(cmp.lhs);
    step.rhs = std::move(cmp.rhs);
    step.precision_bits = cmp.precision_bits;
    const bool want_less = step.relation == "<";
    step.holds = (cmp.ordering == Ordering::Less) == want_less;
    return step;
}

}  // namespace

std::uint64_t max_q_from_classbound(OddPrime p, unsigned precision_bits) {
    const Expr bound = mm_bound_expr(p);
    const unsigned long exponent = (p - 5) / 2;
    auto below_bound = [&](std::uint64_t q) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), q, exponent);
        return certified_less(Expr(power), bound, precision_bits);
    };
    if (!below_bound(2)) return 1;
    std::uint64_t q = 2;
    while (below_bound(q + 1)) ++q;
    return q;
}

Expr mignotte_roy_expr(const BigInt& p, const BigInt& q) {
    if (q < 3000) throw DomainError("Mignotte-Roy inequality needs q >= 3000, got " + q.get_str());
    if (p < 1) throw DomainError("Mignotte-Roy inequality needs p >= 1");
    const Expr log_q = log(Expr(q));
    const Expr bracket = log(Expr(p)) - log(log_q) + Expr(make_rational(233, 100));
    return Expr(make_rational(277, 100)) * Expr(q) * log_q * pow(bracket, 2);
}

Interval mignotte_roy_rhs(const BigInt& p, const BigInt& q, unsigned precision_bits) {
    return mignotte_roy_expr(p, q).eval(precision_bits);
}

std::uint64_t fixed_point_bound(const Rational& c, unsigned k, unsigned precision_bits) {
    if (c < 0) throw DomainError("fixed_point_bound: c must be nonnegative");
    if (k < 1 || k > 40) throw DomainError("fixed_point_bound: k must lie in [1, 40]");
    if (c == 0) return 0;

    const Expr coefficient(c);
    auto passes = [&](std::uint64_t n) {
        return certified_compare(integer(n), coefficient * pow(log(integer(n)), k), precision_bits).ordering ==
               Ordering::Greater;
    };
    auto log_exceeds_k = [&](std::uint64_t n) {
        return certified_compare(log(integer(n)), Expr(static_cast<long>(k)), precision_bits).ordering ==
               Ordering::Greater;
    };

    // start = least integer with ln(start) > k
    auto start = static_cast<std::uint64_t>(std::ceil(std::exp(static_cast<double>(k))));
    while (start > 2 && log_exceeds_k(start - 1)) --start;
    while (!log_exceeds_k(start)) ++start;

    if (passes(start)) return passes(start - 1) ? 0 : start - 1;

    std::uint64_t lo = start;  // fails
    std::uint64_t hi = 2 * start;
    while (!passes(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (passes(mid) ? hi : lo) = mid;
    }
    return lo;
}

BoundsReport contradiction_chain(unsigned precision_bits) {
    const unsigned bits = precision_bits;
    const Expr two_pi = Expr(2) * Expr::pi();
    const Rational mr_constant = make_rational(277, 100);
    const Rational c = make_rational(192, 100);
    constexpr unsigned k = 6;

    BoundsReport report;
    report.notes = {
        "log is read as the natural logarithm throughout",
        "q_lower = 100001 encodes the known lower bound q > 10^5; it is an input, not derived here",
        "the step sequence is one explicit reconstruction of the combined inequalities",
    };
    auto& steps = report.steps;

    steps.push_back(certified_step(
        "q^((p-5)/2) <= h^-(p) < (2 pi)^(-p/2) p^((p+31)/4) <= p^((p-5)/4) forces q < sqrt(p) once "
        "18 ln p / p < ln(2 pi); checked at p = 201",
        Expr(18) * log(Expr(201)) / Expr(201), "<", log(two_pi), bits));
    steps.push_back(certified_step("ln(p)/p is decreasing for p >= 3: 1 - ln 3 < 0", Expr(1) - log(Expr(3)), "<",
                                   Expr(0), bits));
    steps.push_back(certified_step("Mignotte-Roy applies since q >= q_lower > 3000", integer(kQLowerBound), ">",
                                   Expr(3000), bits));
    steps.push_back(certified_step(
        "ln ln q > 2.33 for q > 10^5, so 0 < ln p - ln ln q + 2.33 < ln p (using ln ln q < ln q < ln p)",
        log(log(integer(kQLowerBound))), ">", Expr(make_rational(233, 100)), bits));
    steps.push_back(certified_step(
        "x ln x is increasing for x >= 3 (ln 3 + 1 > 0), so q ln q < sqrt(p) ln sqrt(p) = sqrt(p) ln(p) / 2",
        log(Expr(3)) + Expr(1), ">", Expr(0), bits));
    steps.push_back(exact_step("p <= (2.77/2) sqrt(p) (ln p)^3 with 2.77/2 = 1.385", mr_constant / 2,
                               make_rational(277, 200), bits));
    steps.push_back(certified_step("squaring: p <= 1.385^2 (ln p)^6 and 1.385^2 < 1.92",
                                   pow(Expr(make_rational(277, 200)), 2), "<", Expr(c), bits));

    const std::uint64_t p_star = fixed_point_bound(c, k, bits);
    report.p_star = p_star;
    steps.push_back(certified_step("p_star lies where t - 6 ln t is increasing: ln(p_star) > 6",
                                   log(integer(p_star)), ">", Expr(static_cast<long>(k)), bits));
    steps.push_back(certified_step("p_star itself satisfies p_star < 1.92 (ln p_star)^6", integer(p_star), "<",
                                   Expr(c) * pow(log(integer(p_star)), k), bits));
    steps.push_back(certified_step("every p > p_star violates p <= 1.92 (ln p)^6: checked at p_star + 1",
                                   integer(p_star + 1), ">", Expr(c) * pow(log(integer(p_star + 1)), k), bits));
    steps.push_back(certified_step("p <= p_star < 6.6 * 10^7", integer(p_star), "<", integer(66'000'000), bits));
    steps.push_back(certified_step("q < sqrt(p) <= sqrt(p_star) < 8200", integer(p_star), "<",
                                   integer(8200ULL * 8200ULL), bits));

    // q^2 < p <= p_star
    report.q_upper = isqrt(p_star - 1);
    steps.push_back(certified_step("q <= q_upper < q_lower: contradiction", integer(report.q_upper), "<",
                                   integer(report.q_lower), bits));

    bool all_hold = true;
    for (const auto& step : steps) all_hold = all_hold && step.holds;
    report.contradiction = all_hold && report.q_upper < report.q_lower;
    return report;
}

}  // namespace catalan

#pragma once

#include <memory>
#include <string>

#include "catalan/numeric.hpp"

namespace catalan {

/// Cap for the adaptive precision protocol; comparisons still ambiguous at
/// this many bits raise InconclusivePrecision.
inline constexpr unsigned kMaxPrecisionBits = 4096;
inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Closed real interval [lo, hi] with exact rational endpoints.
///
/// Results of arithmetic are rounded outward to dyadic endpoints with at most
/// precision_bits significant bits, so the enclosure is always rigorous. Exact
/// constants are not rounded until they take part in an operation.
class Interval {
public:
    /// Throws DomainError if lo > hi or precision_bits < 2.
    Interval(Rational lo, Rational hi, unsigned precision_bits);

    static Interval exact(const Rational& value, unsigned precision_bits);

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    unsigned precision_bits() const noexcept { return bits_; }

    Rational width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

    /// Every point of *this is strictly below every point of other.
    bool certainly_less(const Interval& other) const { return hi_ < other.lo_; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws DomainError if b contains 0.
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_;
    Rational hi_;
    unsigned bits_;
};

/// Natural logarithm; throws DomainError unless x.lo() > 0.
Interval log(const Interval& x);
Interval exp(const Interval& x);
/// Throws DomainError if x.lo() < 0.
Interval sqrt(const Interval& x);
Interval pow(const Interval& base, unsigned exponent);
/// base^exponent = exp(exponent * log(base)); base must be positive.
Interval pow(const Interval& base, const Interval& exponent);
Interval pi_interval(unsigned precision_bits);

/// Largest dyadic with `bits` significant bits that is <= x (resp. smallest >= x).
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

std::string to_string(const Interval& x);

/// Immutable expression tree over rationals, re-evaluable at any precision.
/// Cheap to copy; nodes are shared.
class Expr {
public:
    Expr(const Rational& value);  // NOLINT(google-explicit-constructor)
    Expr(long value);             // NOLINT(google-explicit-constructor)
    Expr(const BigInt& value);    // NOLINT(google-explicit-constructor)

    static Expr pi();

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr log(const Expr& x);
    friend Expr exp(const Expr& x);
    friend Expr sqrt(const Expr& x);
    friend Expr pow(const Expr& base, unsigned exponent);
    friend Expr pow(const Expr& base, const Expr& exponent);

    Interval eval(unsigned precision_bits) const;

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Interval interval_eval(const Expr& expr, unsigned precision_bits);

enum class Ordering { Less, Greater };

/// Outcome of a certified comparison: the enclosures that decided it and the
/// precision at which they became disjoint.
struct Comparison {
    Ordering ordering;
    Interval lhs;
    Interval rhs;
    unsigned precision_bits;
};

/// Evaluates both sides at start_bits, doubling on overlap until the intervals
/// are disjoint. Throws InconclusivePrecision past kMaxPrecisionBits (in
/// particular when a == b exactly).
Comparison certified_compare(const Expr& a, const Expr& b,
                             unsigned start_bits = kDefaultPrecisionBits);

inline bool certified_less(const Expr& a, const Expr& b,
                           unsigned start_bits = kDefaultPrecisionBits) {
    return certified_compare(a, b, start_bits).ordering == Ordering::Less;
}

}  // namespace catalan

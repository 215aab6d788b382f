#include "catalan/interval.hpp"

#include <algorithm>
#include <utility>

#include "catalan/errors.hpp"
#include "mpfr_real.hpp"

namespace catalan {

using detail::MpfrReal;

namespace {

Rational round_dir(const Rational& x, unsigned bits, mpfr_rnd_t rnd) {
    return MpfrReal(x, bits, rnd).to_rational();
}

Interval outward(const Rational& lo, const Rational& hi, unsigned bits) {
    return Interval(round_down(lo, bits), round_up(hi, bits), bits);
}

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Image of [lo, hi] under an increasing function, each endpoint correctly rounded
// in the outward direction.
Interval increasing_image(const Interval& x, MpfrUnary fn) {
    const unsigned bits = x.precision_bits();
    MpfrReal lo(x.lo(), bits, MPFR_RNDD);
    MpfrReal hi(x.hi(), bits, MPFR_RNDU);
    MpfrReal out_lo(bits);
    MpfrReal out_hi(bits);
    fn(out_lo.get(), lo.get(), MPFR_RNDD);
    fn(out_hi.get(), hi.get(), MPFR_RNDU);
    return Interval(out_lo.to_rational(), out_hi.to_rational(), bits);
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

}  // namespace

Rational round_down(const Rational& x, unsigned bits) { return round_dir(x, bits, MPFR_RNDD); }
Rational round_up(const Rational& x, unsigned bits) { return round_dir(x, bits, MPFR_RNDU); }

Interval::Interval(Rational lo, Rational hi, unsigned precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), bits_(precision_bits) {
    if (bits_ < 2) throw DomainError("Interval: precision must be at least 2 bits");
    if (lo_ > hi_) throw DomainError("Interval: lo > hi");
}

Interval Interval::exact(const Rational& value, unsigned precision_bits) {
    return Interval(value, value, precision_bits);
}

Interval operator+(const Interval& a, const Interval& b) {
    return outward(a.lo_ + b.lo_, a.hi_ + b.hi_, std::min(a.bits_, b.bits_));
}

Interval operator-(const Interval& a, const Interval& b) {
    return outward(a.lo_ - b.hi_, a.hi_ - b.lo_, std::min(a.bits_, b.bits_));
}

Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_, a.bits_); }

Interval operator*(const Interval& a, const Interval& b) {
    const Rational products[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    auto [lo, hi] = std::minmax_element(std::begin(products), std::end(products));
    return outward(*lo, *hi, std::min(a.bits_, b.bits_));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("interval division by an interval containing 0");
    const Rational quotients[] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    auto [lo, hi] = std::minmax_element(std::begin(quotients), std::end(quotients));
    return outward(*lo, *hi, std::min(a.bits_, b.bits_));
}

Interval log(const Interval& x) {
    if (x.lo() <= 0) throw DomainError("log of an interval that is not strictly positive");
    return increasing_image(x, &mpfr_log);
}

Interval exp(const Interval& x) { return increasing_image(x, &mpfr_exp); }

Interval sqrt(const Interval& x) {
    if (x.lo() < 0) throw DomainError("sqrt of an interval with negative part");
    return increasing_image(x, &mpfr_sqrt);
}

Interval pow(const Interval& base, unsigned exponent) {
    const unsigned bits = base.precision_bits();
    if (exponent == 0) return Interval::exact(1, bits);
    Rational lo_pow = rational_pow(base.lo(), exponent);
    Rational hi_pow = rational_pow(base.hi(), exponent);
    if (exponent % 2 == 1 || base.lo() >= 0) return outward(lo_pow, hi_pow, bits);
    if (base.hi() <= 0) return outward(hi_pow, lo_pow, bits);
    return outward(0, std::max(lo_pow, hi_pow), bits);
}

Interval pow(const Interval& base, const Interval& exponent) {
    if (base.lo() <= 0) throw DomainError("real power needs a positive base");
    return exp(exponent * log(base));
}

Interval pi_interval(unsigned precision_bits) {
    MpfrReal lo(precision_bits);
    MpfrReal hi(precision_bits);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return Interval(lo.to_rational(), hi.to_rational(), precision_bits);
}

std::string to_string(const Interval& x) {
    return "[" + x.lo().get_str() + ", " + x.hi().get_str() + "]";
}

// ---------------------------------------------------------------------------

struct Expr::Node {
    enum class Kind { Const, Pi, Add, Sub, Mul, Div, Neg, Log, Exp, Sqrt, PowInt, Pow };

    Kind kind;
    Rational value;
    unsigned exponent = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;

    Interval eval(unsigned bits) const {
        switch (kind) {
            case Kind::Const: return Interval::exact(value, bits);
            case Kind::Pi: return pi_interval(bits);
            case Kind::Add: return lhs->eval(bits) + rhs->eval(bits);
            case Kind::Sub: return lhs->eval(bits) - rhs->eval(bits);
            case Kind::Mul: return lhs->eval(bits) * rhs->eval(bits);
            case Kind::Div: return lhs->eval(bits) / rhs->eval(bits);
            case Kind::Neg: return -lhs->eval(bits);
            case Kind::Log: return log(lhs->eval(bits));
            case Kind::Exp: return exp(lhs->eval(bits));
            case Kind::Sqrt: return sqrt(lhs->eval(bits));
            case Kind::PowInt: return pow(lhs->eval(bits), exponent);
            case Kind::Pow: return pow(lhs->eval(bits), rhs->eval(bits));
        }
        throw InternalError("Expr: unknown node kind");
    }
};

namespace {

using Kind = Expr::Node::Kind;

std::shared_ptr<const Expr::Node> make_node(Kind kind, std::shared_ptr<const Expr::Node> lhs = nullptr,
                                            std::shared_ptr<const Expr::Node> rhs = nullptr) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

std::shared_ptr<const Expr::Node> make_const(const Rational& value) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = Kind::Const;
    node->value = value;
    return node;
}

}  // namespace

Expr::Expr(const Rational& value) : node_(make_const(value)) {}
Expr::Expr(long value) : node_(make_const(Rational(value))) {}
Expr::Expr(const BigInt& value) : node_(make_const(Rational(value))) {}

Expr Expr::pi() { return Expr(make_node(Kind::Pi)); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Add, a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Sub, a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Mul, a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Div, a.node_, b.node_)); }
Expr operator-(const Expr& a) { return Expr(make_node(Kind::Neg, a.node_)); }
Expr log(const Expr& x) { return Expr(make_node(Kind::Log, x.node_)); }
Expr exp(const Expr& x) { return Expr(make_node(Kind::Exp, x.node_)); }
Expr sqrt(const Expr& x) { return Expr(make_node(Kind::Sqrt, x.node_)); }
Expr pow(const Expr& base, const Expr& exponent) {
    return Expr(make_node(Kind::Pow, base.node_, exponent.node_));
}
Expr pow(const Expr& base, unsigned exponent) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = Kind::PowInt;
    node->exponent = exponent;
    node->lhs = base.node_;
    return Expr(std::move(node));
}

Interval Expr::eval(unsigned precision_bits) const {
    if (precision_bits < 2) throw DomainError("precision must be at least 2 bits");
    return node_->eval(precision_bits);
}

Interval interval_eval(const Expr& expr, unsigned precision_bits) { return expr.eval(precision_bits); }

Comparison certified_compare(const Expr& a, const Expr& b, unsigned start_bits) {
    unsigned bits = std::max(start_bits, 2u);
    while (true) {
        Interval lhs = a.eval(bits);
        Interval rhs = b.eval(bits);
        if (lhs.certainly_less(rhs)) return {Ordering::Less, std::move(lhs), std::move(rhs), bits};
        if (rhs.certainly_less(lhs)) return {Ordering::Greater, std::move(lhs), std::move(rhs), bits};
        if (bits >= kMaxPrecisionBits) {
            throw InconclusivePrecision("comparison undecided at " + std::to_string(bits) +
                                        " bits: " + to_string(lhs) + " vs " + to_string(rhs));
        }
        bits = std::min(bits * 2, kMaxPrecisionBits);
    }
}

}  // namespace catalan

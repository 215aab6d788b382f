#pragma once

#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace catalan::detail {

// RAII owner of an mpfr_t at a fixed precision.
class MpfrReal {
public:
    explicit MpfrReal(unsigned bits) { mpfr_init2(value_, static_cast<mpfr_prec_t>(bits)); }
    MpfrReal(const mpq_class& q, unsigned bits, mpfr_rnd_t rnd) : MpfrReal(bits) {
        mpfr_set_q(value_, q.get_mpq_t(), rnd);
    }
    MpfrReal(const MpfrReal& other) : MpfrReal(static_cast<unsigned>(mpfr_get_prec(other.value_))) {
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    MpfrReal& operator=(const MpfrReal& other) {
        if (this != &other) {
            mpfr_set_prec(value_, mpfr_get_prec(other.value_));
            mpfr_set(value_, other.value_, MPFR_RNDN);
        }
        return *this;
    }
    ~MpfrReal() { mpfr_clear(value_); }

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }

    // Exact: every finite mpfr value is a dyadic rational.
    mpq_class to_rational() const {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), value_);
        return q;
    }

private:
    mpfr_t value_;
};

}  // namespace catalan::detail

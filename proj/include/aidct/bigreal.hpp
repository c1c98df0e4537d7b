#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace aidct {

// Arbitrary-precision real backed by MPFR. Value semantics; binary
// operations round to the larger operand precision (MPFR_RNDN).
class BigReal {
public:
    explicit BigReal(unsigned prec_bits = 128) {
        mpfr_init2(v_, static_cast<mpfr_prec_t>(prec_bits));
        mpfr_set_zero(v_, 1);
    }

    BigReal(const BigReal& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }

    BigReal& operator=(const BigReal& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_int(std::int64_t x, unsigned prec_bits) {
        BigReal r(prec_bits);
        mpfr_set_si(r.v_, static_cast<long>(x), MPFR_RNDN);
        return r;
    }

    static BigReal from_double(double x, unsigned prec_bits) {
        BigReal r(prec_bits);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigReal pi(unsigned prec_bits) {
        BigReal r(prec_bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    std::string to_string(int digits = 24) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(result_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(result_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(result_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        BigReal r(result_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigReal operator-() const {
        BigReal r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

    // *this += x * k for integer k, in place at this value's precision.
    BigReal& add_scaled(const BigReal& x, std::int64_t k) {
        BigReal t(precision());
        mpfr_mul_si(t.v_, x.v_, static_cast<long>(k), MPFR_RNDN);
        mpfr_add(v_, v_, t.v_, MPFR_RNDN);
        return *this;
    }

    friend BigReal operator*(const BigReal& a, std::int64_t k) {
        BigReal r(a.precision());
        mpfr_mul_si(r.v_, a.v_, static_cast<long>(k), MPFR_RNDN);
        return r;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigReal sqrt(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal abs(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal cos(const BigReal& a) {
        BigReal r(a.precision());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

private:
    static mpfr_prec_t result_prec(const BigReal& a, const BigReal& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }

    mpfr_t v_;
};

}  // namespace aidct

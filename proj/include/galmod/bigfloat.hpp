#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "galmod/rational.hpp"

namespace galmod {

// Value-semantics wrapper over an mpfr_t at explicit binary precision.
// Every operation rounds to the larger precision of its operands
// (round-to-nearest), so results carry at most 0.5 ulp error per step;
// the documented error budget of 2^-(bits-8) per elementary operation
// holds with a wide margin for the expression sizes used here.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = 128) : prec_(precision_bits) {
        mpfr_init2(v_, prec_);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(const Rational& q, long bits) {
        BigFloat x(bits);
        mpfr_set_q(x.v_, q.get_mpq_t(), MPFR_RNDN);
        return x;
    }
    static BigFloat of(double d, long bits) {
        BigFloat x(bits);
        mpfr_set_d(x.v_, d, MPFR_RNDN);
        return x;
    }
    static BigFloat of(long n, long bits) {
        BigFloat x(bits);
        mpfr_set_si(x.v_, n, MPFR_RNDN);
        return x;
    }
    static BigFloat pi(long bits) {
        BigFloat x(bits);
        mpfr_const_pi(x.v_, MPFR_RNDN);
        return x;
    }

    long precision() const { return prec_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const {
        char buf[256];
        mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v_);
        return std::string(buf);
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec_);
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec_);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec_);
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(a.prec_);
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }

private:
    long prec_;
    mpfr_t v_;
};

// A complex value at tracked precision; houses the sigma_v-embedded data.
struct ComplexApprox {
    BigFloat re, im;
    long precision_bits;

    explicit ComplexApprox(long bits = 128)
        : re(bits), im(bits), precision_bits(bits) {}
    ComplexApprox(BigFloat r, BigFloat i)
        : re(std::move(r)), im(std::move(i)),
          precision_bits(std::max(re.precision(), im.precision())) {}

    ComplexApprox conj() const { return ComplexApprox(re, -im); }
    BigFloat abs() const { return sqrt(re * re + im * im); }
    double abs_double() const { return abs().to_double(); }

    friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
        return ComplexApprox(a.re + b.re, a.im + b.im);
    }
    friend ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) {
        return ComplexApprox(a.re - b.re, a.im - b.im);
    }
    friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
        return ComplexApprox(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
};

}  // namespace galmod

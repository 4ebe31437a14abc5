#pragma once

#include <cstdarg>
#include <cstdio>

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

namespace ballspec {

// Arbitrary-precision real number backed by MPFR, round-to-nearest
// throughout. Every value carries its own precision in bits; binary
// operations produce a result at the larger of the two operand precisions.
class BigFloat {
public:
    static constexpr long min_precision = 53;

    BigFloat() { mpfr_init2(v_, min_precision); mpfr_set_zero(v_, 1); }
    explicit BigFloat(long prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    BigFloat(double x, long prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long x, long prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const mpz_class& z, long prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, min_precision);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }
    BigFloat round_to(long prec) const {
        BigFloat r{clamp(prec)};
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::string str(int digits = 20) const;

    BigFloat operator-() const {
        BigFloat r{precision()};
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r{join(a, b)};
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r{join(a, b)};
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r{join(a, b)};
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r{join(a, b)};
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r{a.precision()};
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    // pre: a >= 0
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r{a.precision()};
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r{join(a, b)};
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r{a.precision()};
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend void sin_cos(const BigFloat& a, BigFloat& s, BigFloat& c) {
        BigFloat rs{a.precision()}, rc{a.precision()};
        mpfr_sin_cos(rs.v_, rc.v_, a.v_, MPFR_RNDN);
        s = std::move(rs);
        c = std::move(rc);
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r{join(y, x)};
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    // log2(|a|) as a double; -inf for a = 0. Used for magnitude bounds where
    // the value itself may exceed double range.
    friend double log2_magnitude(const BigFloat& a) {
        if (mpfr_zero_p(a.v_)) return -std::numeric_limits<double>::infinity();
        long exp2;
        double m = mpfr_get_d_2exp(&exp2, a.v_, MPFR_RNDN);
        return std::log2(std::abs(m)) + static_cast<double>(exp2);
    }
    friend const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static long clamp(long prec) { return prec < min_precision ? min_precision : prec; }
    static long join(const BigFloat& a, const BigFloat& b) {
        return std::max(a.precision(), b.precision());
    }
    mpfr_t v_;
};

// Complex value as a BigFloat pair. Component precisions are kept equal by
// construction; mixed-precision operands widen to the larger.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, long prec) : re(r, prec), im(i, prec) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(BigFloat{r.precision()}) {}
    static BigComplex zero(long prec) { return {BigFloat{prec}, BigFloat{prec}}; }
    static BigComplex unit_i(long prec) { return {BigFloat{prec}, BigFloat{1.0, prec}}; }

    long precision() const { return std::max(re.precision(), im.precision()); }
    BigComplex round_to(long prec) const { return {re.round_to(prec), im.round_to(prec)}; }
    std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex operator-() const { return {-re, -im}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
    BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
    BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
    BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }

    // Principal square root: nonnegative real part, branch cut on the
    // negative real axis; maps the closed upper half-plane into the closed
    // first quadrant.
    friend BigComplex sqrt(const BigComplex& a);

    // e^a = e^Re(a) (cos Im a + i sin Im a)
    friend BigComplex cexp(const BigComplex& a);
};

} // namespace ballspec

#include "ballspec/polynomial.hpp"

#include <stdexcept>

namespace ballspec::exactpoly {

Polynomial::Polynomial(std::vector<BigFloat> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) throw std::invalid_argument("Polynomial: empty coefficient list");
}

Polynomial Polynomial::from_integers(const std::vector<mpz_class>& coeffs, long prec) {
    std::vector<BigFloat> c;
    c.reserve(coeffs.size());
    for (const auto& z : coeffs) c.emplace_back(z, prec);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) {
        std::vector<BigFloat> z;
        z.emplace_back(coeffs_[0].precision());
        return Polynomial(std::move(z));
    }
    std::vector<BigFloat> d;
    d.reserve(coeffs_.size() - 1);
    for (size_t m = 1; m < coeffs_.size(); ++m)
        d.push_back(coeffs_[m] * BigFloat(static_cast<long>(m), coeffs_[m].precision()));
    return Polynomial(std::move(d));
}

// The Horner loops below run on raw mpfr scratch: one complex step is two
// fused mpfr_fmms/fmma products plus the coefficient add, with no temporary
// allocations. Coefficients of any precision are rounded implicitly by the
// destination. Conjugating w negates exactly the inputs of the imaginary
// lanes, so conjugate inputs yield bit-exact conjugate outputs.

Polynomial::Evaluation Polynomial::eval(const BigComplex& w) const {
    const long prec = w.precision();
    Evaluation out{BigComplex::zero(prec), BigFloat{prec}};
    mpfr_t t1, t2, aw, ac;
    mpfr_inits2(prec, t1, t2, aw, ac, static_cast<mpfr_ptr>(nullptr));
    mpfr_ptr br = out.value.re.raw(), bi = out.value.im.raw(), sc = out.scale.raw();
    mpfr_hypot(aw, w.re.raw(), w.im.raw(), MPFR_RNDN);
    mpfr_set_zero(sc, 1);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        mpfr_fmms(t1, br, w.re.raw(), bi, w.im.raw(), MPFR_RNDN);
        mpfr_fmma(t2, br, w.im.raw(), bi, w.re.raw(), MPFR_RNDN);
        mpfr_add(br, t1, coeffs_[i].raw(), MPFR_RNDN);
        mpfr_set(bi, t2, MPFR_RNDN);
        mpfr_abs(ac, coeffs_[i].raw(), MPFR_RNDN);
        mpfr_fma(sc, sc, aw, ac, MPFR_RNDN);
    }
    mpfr_clears(t1, t2, aw, ac, static_cast<mpfr_ptr>(nullptr));
    return out;
}

void Polynomial::eval_with_derivative(const BigComplex& w, BigComplex& value,
                                      BigComplex& deriv) const {
    const long prec = w.precision();
    value = BigComplex::zero(prec);
    deriv = BigComplex::zero(prec);
    mpfr_t t1, t2;
    mpfr_inits2(prec, t1, t2, static_cast<mpfr_ptr>(nullptr));
    mpfr_ptr br = value.re.raw(), bi = value.im.raw();
    mpfr_ptr dr = deriv.re.raw(), di = deriv.im.raw();
    for (size_t i = coeffs_.size(); i-- > 0;) {
        mpfr_fmms(t1, dr, w.re.raw(), di, w.im.raw(), MPFR_RNDN);
        mpfr_fmma(t2, dr, w.im.raw(), di, w.re.raw(), MPFR_RNDN);
        mpfr_add(dr, t1, br, MPFR_RNDN);
        mpfr_add(di, t2, bi, MPFR_RNDN);
        mpfr_fmms(t1, br, w.re.raw(), bi, w.im.raw(), MPFR_RNDN);
        mpfr_fmma(t2, br, w.im.raw(), bi, w.re.raw(), MPFR_RNDN);
        mpfr_add(br, t1, coeffs_[i].raw(), MPFR_RNDN);
        mpfr_set(bi, t2, MPFR_RNDN);
    }
    mpfr_clears(t1, t2, static_cast<mpfr_ptr>(nullptr));
}

void Polynomial::eval_full(const BigComplex& w, BigComplex& value, BigComplex& deriv,
                           BigFloat& scale) const {
    const long prec = w.precision();
    value = BigComplex::zero(prec);
    deriv = BigComplex::zero(prec);
    scale = BigFloat{prec};
    mpfr_t t1, t2, aw, ac;
    mpfr_inits2(prec, t1, t2, aw, ac, static_cast<mpfr_ptr>(nullptr));
    mpfr_ptr br = value.re.raw(), bi = value.im.raw();
    mpfr_ptr dr = deriv.re.raw(), di = deriv.im.raw();
    mpfr_ptr sc = scale.raw();
    mpfr_hypot(aw, w.re.raw(), w.im.raw(), MPFR_RNDN);
    mpfr_set_zero(sc, 1);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        mpfr_fmms(t1, dr, w.re.raw(), di, w.im.raw(), MPFR_RNDN);
        mpfr_fmma(t2, dr, w.im.raw(), di, w.re.raw(), MPFR_RNDN);
        mpfr_add(dr, t1, br, MPFR_RNDN);
        mpfr_add(di, t2, bi, MPFR_RNDN);
        mpfr_fmms(t1, br, w.re.raw(), bi, w.im.raw(), MPFR_RNDN);
        mpfr_fmma(t2, br, w.im.raw(), bi, w.re.raw(), MPFR_RNDN);
        mpfr_add(br, t1, coeffs_[i].raw(), MPFR_RNDN);
        mpfr_set(bi, t2, MPFR_RNDN);
        mpfr_abs(ac, coeffs_[i].raw(), MPFR_RNDN);
        mpfr_fma(sc, sc, aw, ac, MPFR_RNDN);
    }
    mpfr_clears(t1, t2, aw, ac, static_cast<mpfr_ptr>(nullptr));
}

double Polynomial::residual_rel(const BigComplex& w) const {
    Evaluation e = eval(w);
    if (e.scale.is_zero()) return 0.0;
    return (abs(e.value) / e.scale).to_double();
}

} // namespace ballspec::exactpoly

#pragma once

#include <vector>

#include "ballspec/bigfloat.hpp"

namespace ballspec::exactpoly {

// Real-coefficient polynomial with high-precision coefficients, ascending
// powers. Degree is formal: trailing zero coefficients are kept as given.
class Polynomial {
public:
    Polynomial() : coeffs_(1) {}
    explicit Polynomial(std::vector<BigFloat> ascending);
    static Polynomial from_integers(const std::vector<mpz_class>& coeffs, long prec);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigFloat>& coeffs() const { return coeffs_; }
    const BigFloat& operator[](size_t m) const { return coeffs_[m]; }

    Polynomial derivative() const;

    struct Evaluation {
        BigComplex value;
        BigFloat scale; // sum |a_m| |w|^m, for relative residuals
    };
    // Horner evaluation carried out at the precision of w; coefficients are
    // rounded to that precision on the fly.
    Evaluation eval(const BigComplex& w) const;
    BigComplex operator()(const BigComplex& w) const { return eval(w).value; }

    // Value and derivative in one Horner pass, at the precision of w.
    void eval_with_derivative(const BigComplex& w, BigComplex& value, BigComplex& deriv) const;

    // Value, derivative, and the residual scale sum |a_m| |w|^m in a single
    // pass: the workhorse of Newton refinement.
    void eval_full(const BigComplex& w, BigComplex& value, BigComplex& deriv,
                   BigFloat& scale) const;

    // |p(w)| / scale as a double; 0 when the scale vanishes (w = 0 and the
    // constant term is 0, or the zero polynomial).
    double residual_rel(const BigComplex& w) const;

private:
    std::vector<BigFloat> coeffs_;
};

} // namespace ballspec::exactpoly

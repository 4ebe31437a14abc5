#include "ballspec/hankel.hpp"

#include <stdexcept>

#include "ballspec/hankel_polynomial.hpp"
#include "ballspec/polynomial.hpp"

namespace ballspec::hankel {

namespace {

// i^k cycle as a complex multiplier at the given precision
BigComplex minus_i_pow(int k, long prec) {
    // (-i)^k for k mod 4
    switch (((k % 4) + 4) % 4) {
        case 0: return {BigFloat(1.0, prec), BigFloat(0.0, prec)};
        case 1: return {BigFloat(0.0, prec), BigFloat(-1.0, prec)};
        case 2: return {BigFloat(-1.0, prec), BigFloat(0.0, prec)};
        default: return {BigFloat(0.0, prec), BigFloat(1.0, prec)};
    }
}

BigComplex closed_form_value(int n, const BigComplex& z, long prec) {
    using exactpoly::Polynomial;
    auto rn = exactpoly::rn_coefficients(n);
    Polynomial p = Polynomial::from_integers(rn.coeffs, prec);
    const BigComplex i{BigFloat(0.0, prec), BigFloat(1.0, prec)};
    const BigComplex two{BigFloat(2.0, prec), BigFloat(0.0, prec)};
    BigComplex w = i / (two * z);
    return minus_i_pow(n + 1, prec) * (cexp(i * z) / z) * p(w);
}

} // namespace

BigComplex hankel_closed_form(int n, const BigComplex& z) {
    if (n < 0) throw std::invalid_argument("hankel_closed_form: n must be >= 0");
    if (z.is_zero()) throw ZeroArgument("hankel_closed_form: z = 0");
    return closed_form_value(n, z, z.precision());
}

HankelValue hankel_recurrence(int n, const BigComplex& z) {
    if (n < 0) throw std::invalid_argument("hankel_recurrence: n must be >= 0");
    if (z.is_zero()) throw ZeroArgument("hankel_recurrence: z = 0");
    const long prec = z.precision();

    HankelValue out;
    out.n = n;
    out.z = z;

    if (abs(z) < BigFloat(0.05, prec)) {
        const BigComplex i{BigFloat(0.0, prec), BigFloat(1.0, prec)};
        BigComplex below = n == 0 ? cexp(i * z) / z // h_{-1}(z) = e^{iz}/z
                                  : closed_form_value(n - 1, z, prec);
        out.h = closed_form_value(n, z, prec);
        out.dh = below - (BigComplex(BigFloat(static_cast<long>(n) + 1, prec)) / z) * out.h;
        return out;
    }

    const BigComplex i{BigFloat(0.0, prec), BigFloat(1.0, prec)};
    const BigComplex eiz = cexp(i * z);
    BigComplex hm1 = eiz / z;            // h_{-1}(z) = e^{iz}/z
    BigComplex h = (-i) * eiz / z;       // h_0
    for (int k = 0; k < n; ++k) {
        BigComplex next = (BigComplex(BigFloat(2 * static_cast<long>(k) + 1, prec)) / z) * h - hm1;
        hm1 = h;
        h = next;
    }
    out.h = h;
    out.dh = hm1 - (BigComplex(BigFloat(static_cast<long>(n) + 1, prec)) / z) * h;
    return out;
}

double boundary_residual(int n, const BigFloat& kappa, const BigComplex& mu) {
    if (n < 1) throw std::invalid_argument("boundary_residual: n must be >= 1");
    if (kappa.sign() <= 0) throw std::invalid_argument("boundary_residual: kappa must be > 0");
    if (mu.is_zero()) throw ZeroArgument("boundary_residual: mu = 0");
    if (mu.im.sign() <= 0)
        throw std::invalid_argument("boundary_residual: Im mu must be > 0");

    const long prec = std::max(mu.precision(), kappa.precision());
    const BigComplex m = mu.round_to(prec);
    HankelValue v = hankel_recurrence(n, m);
    const BigComplex i{BigFloat(0.0, prec), BigFloat(1.0, prec)};
    const BigComplex one{BigFloat(1.0, prec), BigFloat(0.0, prec)};
    const BigComplex kap{kappa.round_to(prec)};

    BigComplex num = (one - i * kap * m) * v.h + m * v.dh;
    BigFloat scale = abs(v.h) * (BigFloat(1.0, prec) + kappa.round_to(prec) * abs(m))
                   + abs(m * v.dh);
    if (scale.is_zero()) return 0.0;
    return (abs(num) / scale).to_double();
}

} // namespace ballspec::hankel

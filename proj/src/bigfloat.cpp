#include "ballspec/bigfloat.hpp"

#include <vector>

namespace ballspec {

std::string BigFloat::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

BigComplex sqrt(const BigComplex& a) {
    long prec = a.precision();
    if (a.is_zero()) return BigComplex::zero(prec);
    BigFloat r = abs(a);
    if (a.im.is_zero()) {
        if (a.re.sign() >= 0) return {sqrt(a.re), BigFloat{prec}};
        return {BigFloat{prec}, sqrt(-a.re)};
    }
    BigFloat half{0.5, prec};
    BigFloat u = sqrt((r + abs(a.re)) * half);
    BigFloat v = abs(a.im) / (u + u);
    // u >= v > 0; assemble the principal root from the sign pattern
    if (a.re.sign() >= 0) {
        return {u, a.im.sign() >= 0 ? v : -v};
    }
    return {v, a.im.sign() >= 0 ? u : -u};
}

BigComplex cexp(const BigComplex& a) {
    BigFloat mag = exp(a.re);
    BigFloat s, c;
    sin_cos(a.im, s, c);
    return {mag * c, mag * s};
}

} // namespace ballspec

#include "ballspec/hankel_polynomial.hpp"

#include <stdexcept>

namespace ballspec::exactpoly {

RnPolynomial rn_coefficients(int n) {
    if (n < 0) throw std::invalid_argument("rn_coefficients: n must be >= 0");
    RnPolynomial p;
    p.n = n;
    p.coeffs.resize(static_cast<size_t>(n) + 1);
    p.coeffs[0] = 1;
    for (int m = 0; m < n; ++m) {
        // a_{m+1} = a_m (n+m+1)(n-m) / (m+1), division exact
        mpz_class t = p.coeffs[static_cast<size_t>(m)] * (n + m + 1) * (n - m);
        mpz_divexact_ui(p.coeffs[static_cast<size_t>(m) + 1].get_mpz_t(), t.get_mpz_t(),
                        static_cast<unsigned long>(m) + 1);
    }
    return p;
}

std::vector<mpz_class> derivative(const std::vector<mpz_class>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("derivative: empty coefficient list");
    if (coeffs.size() == 1) return {mpz_class(0)};
    std::vector<mpz_class> d(coeffs.size() - 1);
    for (size_t m = 1; m < coeffs.size(); ++m) d[m - 1] = coeffs[m] * static_cast<long>(m);
    return d;
}

} // namespace ballspec::exactpoly

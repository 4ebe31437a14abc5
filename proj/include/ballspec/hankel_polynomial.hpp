#pragma once

#include <gmpxx.h>

#include <vector>

namespace ballspec::exactpoly {

// R_n(w) = sum_{m=0}^{n} a_m w^m with a_m = (n+m)!/(m!(n-m)!), exact.
// a_30 is already ~3e49, so the coefficients live in arbitrary-precision
// integers and are converted to floating point only at evaluation time.
struct RnPolynomial {
    int n = 0;
    std::vector<mpz_class> coeffs; // ascending powers, size n+1
};

// Builds the coefficients by the integer ratio recurrence
//   a_{m+1} (m+1) = a_m (n+m+1)(n-m),  a_0 = 1,
// using exact division only. pre: n >= 0.
RnPolynomial rn_coefficients(int n);

// Formal derivative, ascending coefficients; constants map to [0].
std::vector<mpz_class> derivative(const std::vector<mpz_class>& coeffs);

} // namespace ballspec::exactpoly

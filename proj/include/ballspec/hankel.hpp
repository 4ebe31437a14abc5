#pragma once

#include "ballspec/bigfloat.hpp"
#include "ballspec/errors.hpp"

namespace ballspec::hankel {

struct HankelValue {
    int n = 0;
    BigComplex z;
    BigComplex h;  // h_n(z), spherical Hankel function of the first kind
    BigComplex dh; // d/dz h_n(z)
};

// Upward recurrence from h_0 = -i e^{iz}/z: stable because h_n is the
// solution that grows with n. For |z| < 0.05 the closed form is used instead
// (start-up cancellation); the polynomial there is exact-integer work.
// Throws ZeroArgument for z = 0.
HankelValue hankel_recurrence(int n, const BigComplex& z);

// (-i)^{n+1} e^{iz}/z * R_n(i/(2z)), evaluated through the exact-coefficient
// polynomial pipeline. Throws ZeroArgument for z = 0.
BigComplex hankel_closed_form(int n, const BigComplex& z);

// Relative residual of the impedance boundary equation
//   (1 - i*kappa*mu) h_n(mu) + mu h_n'(mu) = 0
// with the symmetrized scale |h|(1+kappa|mu|) + |mu h'| as denominator, so a
// uniformly tiny e^{i mu} cannot fake a pass. Uses the recurrence only,
// keeping this check independent of the root-finding pipeline.
// pre: n >= 1, kappa > 0, Im mu > 0.
double boundary_residual(int n, const BigFloat& kappa, const BigComplex& mu);

} // namespace ballspec::hankel

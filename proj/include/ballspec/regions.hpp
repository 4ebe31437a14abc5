#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "ballspec/bigfloat.hpp"
#include "ballspec/errors.hpp"

namespace ballspec::regions {

// |Re z| <= c * (|Im z|^(1/2+eps) + 1), Re z < 0: a parabola-like band
// hugging the imaginary axis from the left.
struct ParabolicBand {
    double eps;
    double c;
};

// |Im z| <= c * (|Re z|+1)^(-order), Re z < 0: a strip collapsing onto the
// negative real axis with polynomial decay.
struct AxisStrip {
    int order;
    double c;
};

// |arg z - pi| <= pi/4, |z| >= r_min, Re z < 0
struct Sector {
    double r_min;
};

// |arg z - pi| <= arctan(slope), |z| >= r_min, Re z < 0
struct NarrowSector {
    double slope;
    double r_min;
};

using RegionSpec = std::variant<ParabolicBand, AxisStrip, Sector, NarrowSector>;

// Membership with non-strict boundary inequalities (except Re z < 0, which
// is strict). arg is folded to [0, pi] so both half-planes are treated
// symmetrically. Points with Re z >= 0 are never members.
bool in_region(std::complex<double> z, const RegionSpec& spec);

// z = -lambda^2 h^2. The eigenvalue lambda must sit in the closed second
// quadrant (Re <= 0, Im >= 0); otherwise BranchViolation.
BigComplex lambda_to_z(const BigComplex& lambda, double h);

// lambda = i sqrt(z)/h on the branch mapping the closed upper half-plane
// into the closed first quadrant. Im z < 0 raises BranchViolation.
BigComplex z_to_lambda(const BigComplex& z, double h);

enum class Contour { z1, z2, z3 };

struct ContourPoint {
    Contour contour;
    std::complex<double> z;
    double h;
    double delta;
};

// Uniformly spaced closed sampling of one of the three scan segments:
//   z1: Re z = 1,  h^delta <= Im z <= 1
//   z2: Re z = -1, 0 <= Im z <= 1
//   z3: -1 <= Re z <= 1, Im z = 1
// pre: 0 < h < 1, 0 < delta < 1/2, count >= 2; otherwise InvalidParameter.
std::vector<ContourPoint> sample_contour(Contour contour, double h, double delta, int count);

struct FittedConstants {
    double c_parabolic; // for ParabolicBand(eps, .)
    double c_strip;     // for AxisStrip(order, .)
};

// Minimal constants making every value a member of the two-region union:
// each point is assigned to the region demanding the smaller constant (ties
// go to the parabolic band), and the per-region maxima are returned.
// pre: every value has Re < 0; throws EmptyInput on an empty list.
FittedConstants fit_constants(const std::vector<std::complex<double>>& lambdas, double eps,
                              int order);

} // namespace ballspec::regions

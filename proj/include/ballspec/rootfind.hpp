#pragma once

#include <complex>
#include <vector>

#include "ballspec/bigfloat.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/polynomial.hpp"

namespace ballspec::rootfind {

struct RootOptions {
    long precision = 256;    // working precision for the simultaneous iteration
    double tol_rel = 1e-30;  // residual acceptance threshold (relative to scale)
    double real_tol = 1e-9;  // |Im w| <= real_tol*(1+|w|) snaps to the real axis
    int max_refine = 100;    // Newton iterations at doubled precision
    int max_sweeps = 1000;   // simultaneous-iteration sweeps
};

struct CertifiedRoot {
    BigComplex w;
    double residual_rel = 0.0;
    bool is_real = false;       // if set, Im w is exactly 0
    long refined_precision = 0; // precision of the final Newton polish
};

// All roots of a real-coefficient polynomial, counted with multiplicity,
// sorted by (Re, Im). Non-real roots come in exactly conjugate pairs; roots
// at the origin from trailing zero coefficients are returned exactly.
// Simultaneous Aberth-Ehrlich iteration at opts.precision on the normalized
// polynomial, initial guesses on a perturbed circle of Fujiwara-bound radius,
// then per-root Newton refinement at twice the working precision.
// Throws ConvergenceFailure if a residual stays above opts.tol_rel.
std::vector<CertifiedRoot> find_all_roots(const exactpoly::Polynomial& p,
                                          const RootOptions& opts = {});

// Counterclockwise convex hull (monotone chain). Collinear interior points
// are dropped; degenerate inputs return their extreme points.
std::vector<std::complex<double>> convex_hull_2d(std::vector<std::complex<double>> points);

// True iff q lies within distance tol of the closed hull.
bool point_in_hull(std::complex<double> q, const std::vector<std::complex<double>>& hull,
                   double tol);

} // namespace ballspec::rootfind

#pragma once

#include <complex>
#include <optional>

#include "ballspec/regions.hpp"

namespace ballspec::symbols {

// One evaluation of the boundary symbols at (r0, z). For the sphere with
// constant coupling, the cotangent variables enter only through the scalar
// r0 >= 0 (the Laplace-Beltrami principal symbol), so that collapse is
// exact. branch_boundary marks z - r0 on the positive real axis, where the
// upper-half-plane normalization of the square root is non-informative.
struct SymbolSample {
    double r0 = 0.0;
    std::complex<double> z;
    double gamma = 0.0;
    std::complex<double> rho; // sqrt(z - r0), Im >= 0
    std::complex<double> c;   // rho - gamma sqrt(z)
    std::complex<double> d;   // rho - sqrt(z)/gamma
    bool branch_boundary = false;
};

// sqrt(z - r0) normalized to Im >= 0; for z - r0 positive real the
// nonnegative real root is returned (see SymbolSample::branch_boundary).
// pre: r0 >= 0.
std::complex<double> eval_rho(double r0, std::complex<double> z);

// c = rho - gamma sqrt(z), d = rho - sqrt(z)/gamma, with sqrt(z) on the
// branch mapping the closed upper half-plane into the closed first quadrant.
// pre: gamma > 0.
std::complex<double> eval_c(double r0, std::complex<double> z, double gamma);
std::complex<double> eval_d(double r0, std::complex<double> z, double gamma);

SymbolSample sample_symbols(double r0, std::complex<double> z, double gamma);

// r0* = 1/gamma^2 - 1, the unique r0 >= 0 where d(r0, -1) vanishes; exists
// only for 0 < gamma < 1.
std::optional<double> glancing_r0(double gamma);

enum class BoundarySymbol { c, d };

struct ScanResult {
    double min_abs = 0.0;
    double argmin_r0 = 0.0;
    std::complex<double> argmin_z;
};

// Exhaustive minimum of |symbol| over sample_contour(contour, h, delta,
// grid) x {grid uniform r0 values in [0, r0_max]}. Scan order is r0
// ascending outer, contour samples inner, improving strictly, which makes
// the argmin the lexicographically first minimizer.
ScanResult scan_min_modulus(BoundarySymbol symbol, double gamma, regions::Contour contour,
                            double h, double delta, double r0_max, int grid);

} // namespace ballspec::symbols

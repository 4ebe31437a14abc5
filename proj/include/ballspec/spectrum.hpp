#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ballspec/bigfloat.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/polynomial.hpp"
#include "ballspec/rootfind.hpp"

namespace ballspec::spectrum {

// The two decoupled scalar boundary equations: alpha carries coupling
// kappa = gamma, beta carries kappa = 1/gamma.
enum class ModeFamily { alpha, beta };

const char* family_name(ModeFamily f);

struct BoundaryPolynomial {
    int n = 0;
    BigFloat kappa;
    exactpoly::Polynomial q; // degree n+1, ascending real coefficients
};

// q_n(w) = ((1-kappa)/2) R_n(w) + w^2 R_n'(w); coefficient of w^m is
// ((1-kappa)/2) a_m + (m-1) a_{m-1}. Roots with Re w > 0 are eigenvalue
// sources. Throws InvalidMode for n = 0 (the mode expansion starts at 1).
BoundaryPolynomial boundary_polynomial(int n, const BigFloat& kappa, long precision);

struct Eigenvalue {
    BigComplex lambda;         // -1/(2 w0), Re < 0
    int n = 0;
    ModeFamily family = ModeFamily::alpha;
    int multiplicity = 0;      // 2n+1 (lower bound; coincidences not merged)
    BigComplex w0;             // source root, Re > 0
    BigComplex mu;             // i/(2 w0), Im > 0
    double residual_poly = 0.0;
    double residual_hankel = 0.0;
    bool is_real = false;
};

struct SpectrumOptions {
    long precision = 0;      // 0 = per-n default (see default_precision)
    double root_tol = 1e-30; // polynomial residual acceptance
    double real_tol = 1e-9;
    unsigned threads = 0;    // 0 = hardware concurrency
};

// 128 bits for n <= 20, 256 for n <= 40; above that the coefficient bit
// length plus headroom, rounded up to a multiple of 64.
long default_precision(int n);

// Point spectrum of the dissipative generator for the unit ball: for each
// n in 1..n_max and each family, roots of q_n with Re w > real_tol map to
// lambda = -1/(2w) with multiplicity 2n+1. gamma within 1e-14 of 1 yields
// the empty list. Sorted by Re lambda descending, ties by (n, family,
// Im lambda). Rootfinding failures retry once at doubled precision before
// propagating ConvergenceFailure.
std::vector<Eigenvalue> eigenvalues_ball(double gamma, int n_max,
                                         const SpectrumOptions& opts = {});

// -2 / ((g0-1)(1+sqrt(1+4/(g0-1)))) with g0 = max(gamma, 1/gamma): the
// closed form of the largest real eigenvalue. Throws GammaIsOne.
double lambda1_closed_form(double gamma);

// -1 / max(g0-1, sqrt(g0-1)): upper bound satisfied by every real
// eigenvalue except the first. Throws GammaIsOne.
double real_eigenvalue_bound(double gamma);

// Exclusion bracket for complex roots of the coupling-above-one family:
//   B = (gamma-1)/(2|w0|^2) - sum_j Re z_j/|w0-z_j|^2
//     + sum_{Im z_j>0} 4 Re w0 (Im z_j)^2 / (|w0-z_j|^2 |w0-conj z_j|^2)
// over the roots z_j of R_n. Positivity at a probe w0 (Re > 0, Im != 0)
// certifies that no root of q_n sits there. Throws InvalidGamma for
// gamma <= 1.
double complex_root_certificate(int n, double gamma, std::complex<double> w0,
                                std::span<const std::complex<double>> rn_roots);

// Roots of R_n as double-precision values, sorted by (Re, Im).
std::vector<std::complex<double>> rn_roots(int n, long precision = 0);

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    double margin = 0.0; // distance to the threshold; positive = headroom
    std::string detail;
};

struct VerifyReport {
    double gamma = 0.0;
    int n_max = 0;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// The full battery of spectrum checks: empty spectrum at gamma = 1, first
// eigenvalue against the closed form, the real-eigenvalue bound, realness +
// probe certificates for the coupling-above-one family, per-n existence via
// sign change, the argument-region condition on any complex eigenvalues
// (count reported), and gamma <-> 1/gamma multiset symmetry. Failures are
// report entries, never exceptions.
VerifyReport verify_appendix(double gamma, int n_max, const SpectrumOptions& opts = {});

} // namespace ballspec::spectrum

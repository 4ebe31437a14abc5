#include <doctest.h>

#include <cmath>
#include <complex>

#include "ballspec/hankel.hpp"

using namespace ballspec;
using hankel::hankel_recurrence;

namespace {

constexpr long kPrec = 256;

std::complex<double> h_of(int n, std::complex<double> z) {
    return hankel_recurrence(n, BigComplex(z.real(), z.imag(), kPrec)).h.to_std();
}

double rel_gap(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_SUITE("hankel") {

TEST_CASE("reference values across the z plane") {
    // frozen against an independent multiprecision evaluation
    CHECK(rel_gap(h_of(0, {0.0, 1.0}), {-0.36787944117144233, 0.0}) < 1e-14);
    CHECK(std::abs(h_of(0, {0.0, 1.0}).imag()) < 1e-15);
    CHECK(rel_gap(h_of(1, {0.0, 1.0}), {0.0, 0.73575888234288465}) < 1e-14);
    CHECK(std::abs(h_of(1, {0.0, 1.0}).real()) < 1e-15);
    CHECK(rel_gap(h_of(1, {1.0, 0.0}),
                  {0.30116867893975679, -1.3817732906760362}) < 1e-14);
    CHECK(rel_gap(h_of(2, {2.0, 1.0}),
                  {-0.21340289088119424, -0.26920544783840347}) < 1e-14);
    CHECK(rel_gap(h_of(5, {0.3, 0.2}),
                  {159887.97967161825, 400597.20547752557}) < 1e-13);
    CHECK(rel_gap(h_of(10, {3.0, 4.0}),
                  {1.7329936243791734, 10.803668092820830}) < 1e-13);
}

TEST_CASE("first order from the closed expression -e^{iz}(z+i)/z^2") {
    const std::complex<double> z{1.0, 0.0};
    const std::complex<double> expect =
        -std::exp(std::complex<double>(0.0, 1.0)) * (z + std::complex<double>(0.0, 1.0));
    CHECK(rel_gap(h_of(1, z), expect) < 1e-14);
}

TEST_CASE("recurrence path matches the closed form on a half-annulus grid") {
    // 10 radii x 10 angles covering 0.2 <= |z| <= 20 in the closed upper
    // half-plane, where both evaluation orders are defined
    for (int ir = 0; ir < 10; ++ir) {
        const double r = 0.2 * std::pow(100.0, ir / 9.0);
        for (int ia = 0; ia < 10; ++ia) {
            const double th = 3.141592653589793 * ia / 9.0;
            BigComplex z(r * std::cos(th), r * std::sin(th), kPrec);
            for (int n : {1, 3, 7}) {
                BigComplex rec = hankel_recurrence(n, z).h;
                BigComplex cf = hankel::hankel_closed_form(n, z);
                CHECK(abs(rec - cf).to_double() / abs(cf).to_double() < 1e-10);
            }
        }
    }
}

TEST_CASE("small arguments run through the closed form without blowup") {
    // below |z| = 0.05 the upward recurrence is not used; the three-term
    // identity must still hold between independently computed orders
    for (std::complex<double> z : {std::complex<double>{0.03, 0.01},
                                   std::complex<double>{0.0, 0.04},
                                   std::complex<double>{-0.02, 0.02}}) {
        BigComplex bz(z.real(), z.imag(), kPrec);
        for (int n = 1; n <= 4; ++n) {
            BigComplex lo = hankel_recurrence(n - 1, bz).h;
            BigComplex mid = hankel_recurrence(n, bz).h;
            BigComplex hi = hankel_recurrence(n + 1, bz).h;
            BigComplex lhs = hi + lo;
            BigComplex rhs =
                (BigComplex(BigFloat(static_cast<long>(2 * n + 1), kPrec)) / bz) * mid;
            CHECK(abs(lhs - rhs).to_double() / abs(rhs).to_double() < 1e-30);
        }
    }
}

TEST_CASE("reported derivative agrees with a central difference") {
    const double step = 1e-5;
    for (int n : {1, 4}) {
        for (int k = 0; k < 10; ++k) {
            const std::complex<double> z{0.5 + 0.35 * k, 0.4 + 0.2 * (k % 3)};
            auto v = hankel_recurrence(n, BigComplex(z.real(), z.imag(), kPrec));
            const std::complex<double> num =
                (h_of(n, z + step) - h_of(n, z - step)) / (2.0 * step);
            CHECK(std::abs(v.dh.to_std() - num) / std::abs(num) < 1e-7);
        }
    }
}

TEST_CASE("boundary residual vanishes exactly at an eigenvalue source") {
    // w0 = (1+sqrt5)/4 is the accepted root at n = 1, kappa = 2; mu = i/(2 w0)
    const BigFloat kappa(2.0, kPrec);
    const double w0 = (1.0 + std::sqrt(5.0)) / 4.0;
    const BigComplex mu(0.0, 1.0 / (2.0 * w0), kPrec);
    CHECK(hankel::boundary_residual(1, kappa, mu) < 1e-10);

    // a generic upper-half-plane point is far from solving the equation
    CHECK(hankel::boundary_residual(1, kappa, BigComplex(0.0, 1.0, kPrec)) > 1e-2);

    // the same mu under kappa = 1 no longer solves anything
    CHECK(hankel::boundary_residual(1, BigFloat(1.0, kPrec), mu) > 1e-2);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(hankel_recurrence(2, BigComplex::zero(kPrec)), ZeroArgument);
    CHECK_THROWS_AS(hankel_recurrence(-1, BigComplex(1.0, 0.0, kPrec)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hankel::boundary_residual(0, BigFloat(2.0, kPrec),
                                              BigComplex(0.0, 1.0, kPrec)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hankel::boundary_residual(1, BigFloat(-1.0, kPrec),
                                              BigComplex(0.0, 1.0, kPrec)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hankel::boundary_residual(1, BigFloat(2.0, kPrec),
                                              BigComplex::zero(kPrec)),
                    ZeroArgument);
    CHECK_THROWS_AS(hankel::boundary_residual(1, BigFloat(2.0, kPrec),
                                              BigComplex(0.5, -0.5, kPrec)),
                    std::invalid_argument);
}

} // TEST_SUITE

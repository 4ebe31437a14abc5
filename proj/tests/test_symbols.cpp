#include <doctest.h>

#include <cmath>
#include <complex>

#include "ballspec/symbols.hpp"

using namespace ballspec;
using namespace ballspec::symbols;
using regions::Contour;

TEST_SUITE("symbols") {

TEST_CASE("closed-form values on the negative real axis") {
    // rho(3, -1) = sqrt(-4) on the upper branch
    CHECK(std::abs(eval_rho(3.0, {-1.0, 0.0}) - std::complex<double>(0.0, 2.0)) <
          1e-15);
    // the glancing point of d for gamma = 1/2: rho = 2i, sqrt(z)/gamma = 2i
    CHECK(std::abs(eval_d(3.0, {-1.0, 0.0}, 0.5)) < 1e-15);
    // at r0 = 0 both symbols reduce to (1 -+ gamma^{+-1}) sqrt(z)
    CHECK(std::abs(eval_c(0.0, {-1.0, 0.0}, 0.5) - std::complex<double>(0.0, 0.5)) <
          1e-15);
    CHECK(std::abs(eval_d(0.0, {-1.0, 0.0}, 0.5) - std::complex<double>(0.0, -1.0)) <
          1e-15);
}

TEST_CASE("glancing radius") {
    CHECK(glancing_r0(0.5).has_value());
    CHECK(*glancing_r0(0.5) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(*glancing_r0(0.25) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(!glancing_r0(1.0).has_value());
    CHECK(!glancing_r0(2.0).has_value());
    // d really vanishes there
    auto r0 = *glancing_r0(0.5);
    CHECK(std::abs(eval_d(r0, {-1.0, 0.0}, 0.5)) < 1e-15);
}

TEST_CASE("branch identity rho^2 = z - r0 on all contours") {
    for (Contour c : {Contour::z1, Contour::z2, Contour::z3}) {
        for (const auto& pt : regions::sample_contour(c, 0.01, 0.25, 64)) {
            for (double r0 = 0.0; r0 <= 10.0; r0 += 0.5) {
                const std::complex<double> rho = eval_rho(r0, pt.z);
                CHECK(std::abs(rho * rho + r0 - pt.z) < 1e-13);
                CHECK(rho.imag() >= 0.0);
            }
        }
    }
}

TEST_CASE("branch boundary flag") {
    CHECK(sample_symbols(1.0, {3.0, 0.0}, 2.0).branch_boundary);
    CHECK(!sample_symbols(1.0, {3.0, 0.1}, 2.0).branch_boundary);
    CHECK(!sample_symbols(5.0, {3.0, 0.0}, 2.0).branch_boundary);
    // on the boundary the root is the nonnegative real one
    auto s = sample_symbols(1.0, {3.0, 0.0}, 2.0);
    CHECK(s.rho.real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(s.rho.imag() == 0.0);
}

TEST_CASE("sample bundles the pointwise evaluations") {
    const std::complex<double> z{-0.3, 0.7};
    auto s = sample_symbols(2.5, z, 2.0);
    CHECK(s.r0 == 2.5);
    CHECK(s.z == z);
    CHECK(s.gamma == 2.0);
    CHECK(std::abs(s.rho - eval_rho(2.5, z)) == 0.0);
    CHECK(std::abs(s.c - eval_c(2.5, z, 2.0)) == 0.0);
    CHECK(std::abs(s.d - eval_d(2.5, z, 2.0)) == 0.0);
}

TEST_CASE("scan locates the glancing dip of d below one") {
    // gamma = 1/2: r0* = 3; on the negative-axis contour the dip bottoms out
    // at the nearest grid point, 5 * 239/399
    auto r = scan_min_modulus(BoundarySymbol::d, 0.5, Contour::z2, 0.01, 0.25, 5.0, 400);
    CHECK(r.min_abs == doctest::Approx(0.001253525663727606).epsilon(1e-12));
    CHECK(r.argmin_r0 == doctest::Approx(2.9949874686716793).epsilon(1e-15));
    CHECK(r.argmin_z.real() == -1.0);
    CHECK(r.argmin_z.imag() == 0.0);

    // c stays bounded away from zero for the same coupling
    auto rc = scan_min_modulus(BoundarySymbol::c, 0.5, Contour::z2, 0.01, 0.25, 5.0, 400);
    CHECK(rc.min_abs == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rc.argmin_r0 == 0.0);
}

TEST_CASE("scan is dual under coupling inversion") {
    // gamma = 2 swaps the two roles: now c dips at r0 = gamma^2 - 1
    auto rc = scan_min_modulus(BoundarySymbol::c, 2.0, Contour::z2, 0.01, 0.25, 5.0, 400);
    CHECK(rc.min_abs == doctest::Approx(0.001253525663727606).epsilon(1e-12));
    CHECK(rc.argmin_r0 == doctest::Approx(2.9949874686716793).epsilon(1e-15));
    auto rd = scan_min_modulus(BoundarySymbol::d, 2.0, Contour::z2, 0.01, 0.25, 5.0, 400);
    CHECK(rd.min_abs == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("away from glancing both moduli stay large") {
    auto rd = scan_min_modulus(BoundarySymbol::d, 2.0, Contour::z3, 0.01, 0.25, 5.0, 400);
    CHECK(rd.min_abs > 0.4);
    auto rc = scan_min_modulus(BoundarySymbol::c, 2.0, Contour::z3, 0.01, 0.25, 5.0, 400);
    CHECK(rc.min_abs > 0.4);
}

TEST_CASE("parameter guards") {
    CHECK_THROWS_AS(eval_rho(-0.5, {1.0, 0.0}), InvalidParameter);
    CHECK_THROWS_AS(eval_c(1.0, {1.0, 0.0}, 0.0), InvalidParameter);
    CHECK_THROWS_AS(eval_d(1.0, {1.0, 0.0}, -2.0), InvalidParameter);
    CHECK_THROWS_AS(glancing_r0(0.0), InvalidParameter);
    CHECK_THROWS_AS(sample_symbols(1.0, {1.0, 0.0}, 0.0), InvalidParameter);
    CHECK_THROWS_AS(
        scan_min_modulus(BoundarySymbol::c, 2.0, Contour::z2, 0.01, 0.25, 0.0, 400),
        InvalidParameter);
    CHECK_THROWS_AS(
        scan_min_modulus(BoundarySymbol::c, 2.0, Contour::z2, 0.01, 0.25, 5.0, 1),
        InvalidParameter);
    CHECK_THROWS_AS(
        scan_min_modulus(BoundarySymbol::c, 0.0, Contour::z2, 0.01, 0.25, 5.0, 400),
        InvalidParameter);
}

} // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ballspec/spectrum.hpp"

using namespace ballspec;
using namespace ballspec::spectrum;

namespace {

constexpr long kPrec = 256;

void check_coeffs(const exactpoly::Polynomial& q, const std::vector<double>& want) {
    REQUIRE(q.degree() + 1 == static_cast<int>(want.size()));
    for (size_t m = 0; m < want.size(); ++m)
        CHECK(q[m].to_double() == doctest::Approx(want[m]).epsilon(1e-15));
}

} // namespace

TEST_SUITE("spectrum") {

TEST_CASE("boundary polynomial coefficient tables") {
    // hand-expanded from ((1-kappa)/2) R_n + w^2 R_n'
    check_coeffs(boundary_polynomial(1, BigFloat(2.0, kPrec), kPrec).q,
                 {-0.5, -1.0, 2.0});
    check_coeffs(boundary_polynomial(1, BigFloat(1.0, kPrec), kPrec).q,
                 {0.0, 0.0, 2.0});
    check_coeffs(boundary_polynomial(2, BigFloat(2.0, kPrec), kPrec).q,
                 {-0.5, -3.0, 0.0, 24.0});
    check_coeffs(boundary_polynomial(1, BigFloat(0.5, kPrec), kPrec).q,
                 {0.25, 0.5, 2.0});
}

TEST_CASE("boundary polynomial input validation") {
    CHECK_THROWS_AS(boundary_polynomial(0, BigFloat(2.0, kPrec), kPrec), InvalidMode);
    CHECK_THROWS_AS(boundary_polynomial(1, BigFloat(0.0, kPrec), kPrec),
                    std::invalid_argument);
    CHECK_THROWS_AS(boundary_polynomial(1, BigFloat(-2.0, kPrec), kPrec),
                    std::invalid_argument);
}

TEST_CASE("single mode at coupling 2") {
    auto evs = eigenvalues_ball(2.0, 1);
    REQUIRE(evs.size() == 1);
    const Eigenvalue& e = evs[0];
    CHECK(e.n == 1);
    CHECK(e.family == ModeFamily::alpha);
    CHECK(e.multiplicity == 3);
    CHECK(e.is_real);
    // w0 = (1+sqrt5)/4, lambda = -1/(2 w0) = (1-sqrt5)/2
    CHECK(e.w0.re.to_double() ==
          doctest::Approx(0.8090169943749474241).epsilon(1e-14));
    CHECK(e.w0.im.to_double() == 0.0);
    CHECK(e.lambda.re.to_double() ==
          doctest::Approx(-0.6180339887498948482).epsilon(1e-14));
    CHECK(e.lambda.im.to_double() == 0.0);
    // mu = i/(2 w0)
    CHECK(e.mu.re.to_double() == 0.0);
    CHECK(e.mu.im.to_double() ==
          doctest::Approx(1.0 / (2.0 * 0.8090169943749474241)).epsilon(1e-14));
    CHECK(e.residual_poly < 1e-30);
    CHECK(e.residual_hankel < 1e-12);
}

TEST_CASE("unit coupling yields the empty spectrum") {
    CHECK(eigenvalues_ball(1.0, 40).empty());
    CHECK(eigenvalues_ball(1.0 + 1e-15, 10).empty());
}

TEST_CASE("eigenvalues_ball input validation") {
    CHECK_THROWS_AS(eigenvalues_ball(0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalues_ball(-1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalues_ball(2.0, 0), std::invalid_argument);
}

TEST_CASE("frozen eigenvalue ladder at coupling 2") {
    // independently computed roots of q_n, n = 1..5
    const double lambda_ref[] = {-0.6180339887498948482, -1.1958233454456471528,
                                 -1.7727974815972498217, -2.3498079720530005170,
                                 -2.9268989688575581035};
    const double w0_ref[] = {0.8090169943749474241, 0.4181219591541467518,
                             0.2820401118516433595, 0.2127833448293035124,
                             0.1708292651437717748};
    auto evs = eigenvalues_ball(2.0, 5);
    REQUIRE(evs.size() == 5);
    for (int k = 0; k < 5; ++k) {
        const Eigenvalue& e = evs[k];
        CHECK(e.n == k + 1); // descending Re lambda = ascending n here
        CHECK(e.family == ModeFamily::alpha);
        CHECK(e.multiplicity == 2 * (k + 1) + 1);
        CHECK(e.is_real);
        CHECK(std::abs(e.lambda.re.to_double() - lambda_ref[k]) <
              1e-12 * std::abs(lambda_ref[k]));
        CHECK(std::abs(e.w0.re.to_double() - w0_ref[k]) < 1e-12 * w0_ref[k]);
        CHECK(e.residual_poly < 1e-30);
        CHECK(e.residual_hankel < 1e-10);
    }
}

TEST_CASE("output is sorted by descending real part") {
    auto evs = eigenvalues_ball(1.5, 6);
    REQUIRE(!evs.empty());
    for (size_t k = 1; k < evs.size(); ++k)
        CHECK(evs[k - 1].lambda.re.to_double() >= evs[k].lambda.re.to_double());
}

TEST_CASE("coupling inversion swaps families, not eigenvalues") {
    auto a = eigenvalues_ball(2.0, 3);
    auto b = eigenvalues_ball(0.5, 3);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(std::abs(a[k].lambda.to_std() - b[k].lambda.to_std()) < 1e-12);
        CHECK(a[k].n == b[k].n);
        CHECK(a[k].multiplicity == b[k].multiplicity);
        CHECK(a[k].family != b[k].family);
    }
}

TEST_CASE("closed form of the first eigenvalue") {
    CHECK(lambda1_closed_form(2.0) ==
          doctest::Approx(-0.6180339887498948482).epsilon(1e-15));
    CHECK(lambda1_closed_form(5.0) ==
          doctest::Approx(-0.2071067811865475244).epsilon(1e-15));
    CHECK(lambda1_closed_form(1.25) ==
          doctest::Approx(-1.5615528128088302749).epsilon(1e-15));
    CHECK(lambda1_closed_form(1.01) ==
          doctest::Approx(-9.5124921972503928638).epsilon(1e-15));
    // invariant under gamma -> 1/gamma
    CHECK(lambda1_closed_form(0.5) == lambda1_closed_form(2.0));
    CHECK_THROWS_AS(lambda1_closed_form(1.0), GammaIsOne);

    // the computed first eigenvalue matches the closed form
    auto evs = eigenvalues_ball(3.0, 4);
    REQUIRE(!evs.empty());
    CHECK(std::abs(evs.front().lambda.re.to_double() - lambda1_closed_form(3.0)) <
          1e-12);
}

TEST_CASE("real eigenvalue bound") {
    CHECK(real_eigenvalue_bound(2.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(real_eigenvalue_bound(5.0) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(real_eigenvalue_bound(1.25) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(real_eigenvalue_bound(0.5) == real_eigenvalue_bound(2.0));
    CHECK_THROWS_AS(real_eigenvalue_bound(1.0), GammaIsOne);

    // every real eigenvalue beyond the first obeys it
    const double g = 2.0;
    auto evs = eigenvalues_ball(g, 10);
    const double l1 = lambda1_closed_form(g);
    const double bnd = real_eigenvalue_bound(g);
    for (const auto& e : evs) {
        if (!e.is_real) continue;
        const double re = e.lambda.re.to_double();
        if (std::abs(re - l1) < 1e-9 * (1.0 + std::abs(l1))) continue;
        CHECK(re <= bnd + 1e-12);
    }
}

TEST_CASE("complex root certificate") {
    // n = 1: R_1 = 1 + 2w has the single root -1/2. At w0 = 0.5 + 0.5i:
    //   (gamma-1)/(2|w0|^2) = 1, -Re z /|w0-z|^2 = 0.5/1.25 = 0.4
    std::vector<std::complex<double>> roots{{-0.5, 0.0}};
    const double b = complex_root_certificate(1, 2.0, {0.5, 0.5}, roots);
    CHECK(b == doctest::Approx(1.4).epsilon(1e-14));

    // positivity across a probe grid and orders, the content of the check
    for (int n : {1, 2, 5, 9}) {
        auto rn = rn_roots(n);
        for (int k = 1; k <= 8; ++k) {
            std::complex<double> w0{0.3 * k, 0.7 * ((k % 3) + 1)};
            CHECK(complex_root_certificate(n, 2.0, w0, rn) > 0.0);
        }
    }
}

TEST_CASE("complex root certificate input validation") {
    std::vector<std::complex<double>> one{{-0.5, 0.0}};
    CHECK_THROWS_AS(complex_root_certificate(1, 1.0, {0.5, 0.5}, one), InvalidGamma);
    CHECK_THROWS_AS(complex_root_certificate(1, 0.5, {0.5, 0.5}, one), InvalidGamma);
    CHECK_THROWS_AS(complex_root_certificate(0, 2.0, {0.5, 0.5}, one), InvalidMode);
    CHECK_THROWS_AS(complex_root_certificate(1, 2.0, {-0.5, 0.5}, one),
                    std::invalid_argument);
    CHECK_THROWS_AS(complex_root_certificate(1, 2.0, {0.5, 0.0}, one),
                    std::invalid_argument);
    std::vector<std::complex<double>> two{{-0.5, 0.0}, {-0.5, 0.0}};
    CHECK_THROWS_AS(complex_root_certificate(1, 2.0, {0.5, 0.5}, two),
                    std::invalid_argument);
}

TEST_CASE("roots of the degree-n factor") {
    auto r1 = rn_roots(1);
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1[0] - std::complex<double>(-0.5, 0.0)) < 1e-15);

    // R_2 = 1 + 6w + 12w^2: conjugate pair -1/4 +- i sqrt(3)/12
    auto r2 = rn_roots(2);
    REQUIRE(r2.size() == 2);
    CHECK(std::abs(r2[0] - std::complex<double>(-0.25, -0.14433756729740645)) < 1e-14);
    CHECK(std::abs(r2[1] - std::complex<double>(-0.25, 0.14433756729740645)) < 1e-14);

    // Macdonald property at larger n: strictly left half-plane
    for (const auto& z : rn_roots(12)) CHECK(z.real() < 0.0);
}

TEST_CASE("default precision schedule") {
    CHECK(default_precision(1) == 128);
    CHECK(default_precision(10) == 128);
    CHECK(default_precision(20) == 128);
    CHECK(default_precision(21) == 256);
    CHECK(default_precision(40) == 256);
    long prev = 256;
    for (int n = 41; n <= 101; n += 10) {
        long p = default_precision(n);
        CHECK(p >= 256);
        CHECK(p % 64 == 0);
        CHECK(p >= prev);
        prev = p;
    }
}

TEST_CASE("verification battery passes at coupling 2") {
    VerifyReport rep = verify_appendix(2.0, 6);
    CHECK(rep.gamma == 2.0);
    CHECK(rep.n_max == 6);
    REQUIRE(rep.checks.size() == 7);
    CHECK(rep.checks[0].name == "empty-spectrum-at-unit-coupling");
    CHECK(rep.checks[1].name == "first-eigenvalue-closed-form");
    CHECK(rep.checks[2].name == "real-eigenvalue-bound");
    CHECK(rep.checks[3].name == "dominant-family-real");
    CHECK(rep.checks[4].name == "per-mode-existence");
    CHECK(rep.checks[5].name == "complex-argument-region");
    CHECK(rep.checks[6].name == "coupling-inversion-symmetry");
    for (const auto& c : rep.checks) {
        CHECK(c.status == CheckStatus::pass);
        CHECK(std::isfinite(c.margin));
    }
    CHECK(rep.all_passed());
}

TEST_CASE("verification battery at inverse coupling and unit coupling") {
    VerifyReport inv = verify_appendix(0.5, 4);
    CHECK(inv.all_passed());

    VerifyReport unit = verify_appendix(1.0, 4);
    REQUIRE(unit.checks.size() == 7);
    CHECK(unit.checks[0].status == CheckStatus::pass);
    for (size_t k = 1; k < unit.checks.size(); ++k)
        CHECK(unit.checks[k].status == CheckStatus::skipped);
    CHECK(unit.all_passed()); // skipped checks do not fail the report
}

TEST_CASE("family names") {
    CHECK(std::string(family_name(ModeFamily::alpha)) == "alpha");
    CHECK(std::string(family_name(ModeFamily::beta)) == "beta");
}

} // TEST_SUITE

// Command-line surface: compute spectra, run verification suites, scan
// boundary symbols, and render charts. Exit codes: 0 success, 1 verification
// failure, 2 usage error, 3 numerical failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ballspec/errors.hpp"
#include "ballspec/regions.hpp"
#include "ballspec/spectrum.hpp"
#include "ballspec/spectrum_io.hpp"
#include "ballspec/svg_plot.hpp"
#include "ballspec/symbols.hpp"

namespace {

using namespace ballspec;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        io::atomic_write(out_path, text);
    }
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    double gamma = 0.0;
    int n_max = 40;
    long precision = 256;
    std::string out;
    std::string format = "json";
};

int run_spectrum(const SpectrumArgs& a) {
    spectrum::SpectrumOptions opts;
    opts.precision = a.precision;
    auto evs = spectrum::eigenvalues_ball(a.gamma, a.n_max, opts);
    io::SpectrumDocument doc = io::make_document(a.gamma, a.n_max, a.precision, evs);
    emit(a.format == "csv" ? io::to_csv(doc) : io::to_json(doc), a.out);
    return exit_ok;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    double gamma = 0.0;
    int n_max = 40;
    std::string suite = "all";
    double eps = 0.05;
    int order = 4;
};

std::vector<spectrum::CheckResult> regions_suite(const VerifyArgs& a) {
    using spectrum::CheckStatus;
    std::vector<spectrum::CheckResult> out;

    spectrum::SpectrumOptions opts;
    auto evs = spectrum::eigenvalues_ball(a.gamma, a.n_max, opts);
    std::vector<std::complex<double>> pts;
    pts.reserve(evs.size());
    for (const auto& ev : evs) pts.push_back(ev.lambda.to_std());

    if (pts.empty()) {
        out.push_back({"region-constants-finite", CheckStatus::skipped, 0.0, "spectrum is empty"});
        out.push_back({"region-membership-total", CheckStatus::skipped, 0.0, "spectrum is empty"});
    } else {
        auto fc = regions::fit_constants(pts, a.eps, a.order);
        const bool finite = std::isfinite(fc.c_parabolic) && std::isfinite(fc.c_strip);
        out.push_back({"region-constants-finite",
                       finite ? CheckStatus::pass : CheckStatus::fail, finite ? 1.0 : -1.0,
                       "C_par = " + io::format_double(fc.c_parabolic)
                           + ", C_strip = " + io::format_double(fc.c_strip)});

        const regions::RegionSpec band = regions::ParabolicBand{a.eps, fc.c_parabolic};
        const regions::RegionSpec strip = regions::AxisStrip{a.order, fc.c_strip};
        int outside = 0;
        for (const auto& z : pts)
            if (!regions::in_region(z, band) && !regions::in_region(z, strip)) ++outside;
        out.push_back({"region-membership-total",
                       outside == 0 ? CheckStatus::pass : CheckStatus::fail,
                       -static_cast<double>(outside),
                       std::to_string(outside) + " eigenvalues outside the union"});
    }

    // The lambda <-> z change of variables must be an involution on the
    // closed second quadrant; exercised on the spectrum (folded up) plus a
    // fixed probe grid so the check never goes vacuous.
    {
        const double h = 0.01;
        const long prec = 128;
        std::vector<std::complex<double>> probes;
        probes.reserve(pts.size() + 24);
        for (const auto& z : pts) probes.emplace_back(z.real(), std::abs(z.imag()));
        for (int k = 1; k <= 6; ++k)
            for (int j = 0; j <= 3; ++j) probes.emplace_back(-0.35 * k, 0.25 * j);
        double worst = 0.0;
        for (const auto& lam : probes) {
            const BigComplex big(lam.real(), lam.imag(), prec);
            const BigComplex back = regions::z_to_lambda(regions::lambda_to_z(big, h), h);
            worst = std::max(worst, std::abs(back.to_std() - lam) / (1.0 + std::abs(lam)));
        }
        out.push_back({"lambda-z-round-trip",
                       worst <= 1e-12 ? CheckStatus::pass : CheckStatus::fail, 1e-12 - worst,
                       "max relative gap " + io::format_double(worst)});
    }
    return out;
}

// Modulus behaviour of one boundary symbol along Z2: either a vanishing
// point localized at the predicted glancing radius, or a uniform lower
// bound (half the r0 = 0 value).
spectrum::CheckResult symbol_modulus_check(const char* name, symbols::BoundarySymbol sym,
                                           double gamma, std::optional<double> glance,
                                           double lower_bound) {
    using spectrum::CheckStatus;
    const double h = 0.01, delta = 0.25;
    const int grid = 200;
    if (glance) {
        const double r0_max = std::max(5.0, *glance + 2.0);
        auto res = symbols::scan_min_modulus(sym, gamma, regions::Contour::z2, h, delta,
                                             r0_max, grid);
        const double spacing = r0_max / (grid - 1);
        const bool small = res.min_abs < 0.05;
        const bool located = std::abs(res.argmin_r0 - *glance) <= 2.0 * spacing
                             && std::abs(res.argmin_z - std::complex<double>(-1.0, 0.0))
                                    <= 2.0 / (grid - 1);
        return {name, small && located ? CheckStatus::pass : CheckStatus::fail,
                0.05 - res.min_abs,
                "min " + io::format_double(res.min_abs) + " at r0 = "
                    + io::format_double(res.argmin_r0) + ", glancing radius "
                    + io::format_double(*glance)};
    }
    double min_abs = std::numeric_limits<double>::infinity();
    for (auto contour : {regions::Contour::z2, regions::Contour::z3}) {
        auto res = symbols::scan_min_modulus(sym, gamma, contour, h, delta, 5.0, grid);
        min_abs = std::min(min_abs, res.min_abs);
    }
    return {name, min_abs >= lower_bound - 1e-9 ? CheckStatus::pass : CheckStatus::fail,
            min_abs - lower_bound,
            "min " + io::format_double(min_abs) + " against bound "
                + io::format_double(lower_bound)};
}

std::vector<spectrum::CheckResult> symbols_suite(double gamma) {
    using spectrum::CheckStatus;
    std::vector<spectrum::CheckResult> out;
    const double h = 0.01, delta = 0.25;

    {
        double worst = 0.0;
        for (auto contour : {regions::Contour::z1, regions::Contour::z2, regions::Contour::z3}) {
            auto pts = regions::sample_contour(contour, h, delta, 64);
            for (int k = 0; k <= 20; ++k) {
                const double r0 = 0.5 * k;
                for (const auto& p : pts) {
                    const auto rho = symbols::eval_rho(r0, p.z);
                    worst = std::max(worst, std::abs(rho * rho + r0 - p.z));
                }
            }
        }
        out.push_back({"rho-branch-identity",
                       worst <= 1e-14 ? CheckStatus::pass : CheckStatus::fail, 1e-14 - worst,
                       "max |rho^2 + r0 - z| = " + io::format_double(worst)});
    }

    {
        double worst = std::numeric_limits<double>::infinity();
        auto pts = regions::sample_contour(regions::Contour::z1, h, delta, 64);
        for (int k = 0; k <= 20; ++k) {
            const double r0 = 0.5 * k;
            for (const auto& p : pts) {
                const double lhs = symbols::eval_rho(r0, p.z).imag();
                const double rhs = p.z.imag() / (2.0 * std::sqrt(1.0 + r0 + std::abs(p.z)));
                worst = std::min(worst, lhs - rhs);
            }
        }
        out.push_back({"rho-imaginary-lower-bound",
                       worst >= -1e-12 ? CheckStatus::pass : CheckStatus::fail, worst,
                       "worst margin of Im rho over Im z/(2 sqrt(1+r0+|z|))"});
    }

    if (std::abs(gamma - 1.0) <= 1e-14) {
        const char* why = "coupling is 1: both symbols coincide and vanish at r0 = 0";
        out.push_back({"d-symbol-modulus", CheckStatus::skipped, 0.0, why});
        out.push_back({"c-symbol-modulus", CheckStatus::skipped, 0.0, why});
    } else {
        // d = rho - sqrt(z)/gamma vanishes on Z2 only for gamma < 1 (at
        // r0 = 1/gamma^2 - 1); c = rho - gamma sqrt(z) mirrors this for
        // gamma > 1 (at r0 = gamma^2 - 1).
        const std::optional<double> d_glance = symbols::glancing_r0(gamma);
        const std::optional<double> c_glance =
            gamma > 1.0 ? std::optional<double>(gamma * gamma - 1.0) : std::nullopt;
        out.push_back(symbol_modulus_check("d-symbol-modulus", symbols::BoundarySymbol::d,
                                           gamma, d_glance, (1.0 - 1.0 / gamma) / 2.0));
        out.push_back(symbol_modulus_check("c-symbol-modulus", symbols::BoundarySymbol::c,
                                           gamma, c_glance, (1.0 - gamma) / 2.0));
    }
    return out;
}

int run_verify(const VerifyArgs& a) {
    std::vector<spectrum::CheckResult> checks;
    if (a.suite == "appendix" || a.suite == "all") {
        auto rep = spectrum::verify_appendix(a.gamma, a.n_max, {});
        checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
    }
    if (a.suite == "regions" || a.suite == "all") {
        auto more = regions_suite(a);
        checks.insert(checks.end(), more.begin(), more.end());
    }
    if (a.suite == "symbols" || a.suite == "all") {
        auto more = symbols_suite(a.gamma);
        checks.insert(checks.end(), more.begin(), more.end());
    }

    int passed = 0, failed = 0, skipped = 0;
    for (const auto& c : checks) {
        switch (c.status) {
        case spectrum::CheckStatus::pass:
            ++passed;
            std::printf("PASS %s %s\n", c.name.c_str(), io::format_double(c.margin).c_str());
            break;
        case spectrum::CheckStatus::fail:
            ++failed;
            std::printf("FAIL %s %s\n", c.name.c_str(), io::format_double(c.margin).c_str());
            std::fprintf(stderr, "detail %s: %s\n", c.name.c_str(), c.detail.c_str());
            break;
        case spectrum::CheckStatus::skipped:
            ++skipped;
            break;
        }
    }
    std::printf("{\"gamma\": %s, \"n_max\": %d, \"suite\": \"%s\", \"checks\": %zu, "
                "\"passed\": %d, \"failed\": %d, \"skipped\": %d, \"all_passed\": %s}\n",
                io::format_double(a.gamma).c_str(), a.n_max, a.suite.c_str(), checks.size(),
                passed, failed, skipped, failed == 0 ? "true" : "false");
    return failed == 0 ? exit_ok : exit_verify_failed;
}

// ------------------------------------------------------------ scan-symbols

struct ScanArgs {
    double gamma = 0.0;
    std::string contour;
    double h = 0.01;
    double delta = 0.25;
    double r0_max = 25.0;
    int grid = 400;
};

int run_scan(const ScanArgs& a) {
    const regions::Contour contour = a.contour == "z1"   ? regions::Contour::z1
                                     : a.contour == "z2" ? regions::Contour::z2
                                                         : regions::Contour::z3;
    if (!(a.r0_max > 0.0)) throw InvalidParameter("scan-symbols: --r0-max must be > 0");
    auto zs = regions::sample_contour(contour, a.h, a.delta, a.grid);

    std::string csv;
    csv.reserve(static_cast<size_t>(a.grid) * zs.size() * 96 + 64);
    csv += "r0,z_re,z_im,abs_c,abs_d,im_rho\n";
    for (const auto& p : zs) {
        for (int k = 0; k < a.grid; ++k) {
            const double r0 = a.r0_max * k / (a.grid - 1);
            const auto s = symbols::sample_symbols(r0, p.z, a.gamma);
            csv += io::format_double(s.r0);
            csv += ',';
            csv += io::format_double(p.z.real());
            csv += ',';
            csv += io::format_double(p.z.imag());
            csv += ',';
            csv += io::format_double(std::abs(s.c));
            csv += ',';
            csv += io::format_double(std::abs(s.d));
            csv += ',';
            csv += io::format_double(s.rho.imag());
            csv += '\n';
        }
    }
    std::fwrite(csv.data(), 1, csv.size(), stdout);

    for (auto [sym, label] : {std::pair{symbols::BoundarySymbol::c, "c"},
                              std::pair{symbols::BoundarySymbol::d, "d"}}) {
        auto res = symbols::scan_min_modulus(sym, a.gamma, contour, a.h, a.delta,
                                             a.r0_max, a.grid);
        std::fprintf(stderr, "min |%s| = %s at r0 = %s, z_re = %s, z_im = %s\n", label,
                     io::format_double(res.min_abs).c_str(),
                     io::format_double(res.argmin_r0).c_str(),
                     io::format_double(res.argmin_z.real()).c_str(),
                     io::format_double(res.argmin_z.imag()).c_str());
    }
    return exit_ok;
}

// -------------------------------------------------------------------- plot

struct PlotArgs {
    std::string input;
    double eps = 0.05;
    int order = 4;
    double c_eps = -1.0;
    double c_n = -1.0;
    std::string out;
};

int run_plot(const PlotArgs& a) {
    std::ifstream in(a.input, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot read %s\n", a.input.c_str());
        return exit_usage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    io::SpectrumDocument doc = io::parse_json(buf.str());

    io::PlotOptions popts;
    popts.eps = a.eps;
    popts.order = a.order;
    popts.c_parabolic = a.c_eps;
    popts.c_strip = a.c_n;
    emit(io::render_svg(doc, popts), a.out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for dissipative electromagnetic modes of the unit ball"};
    app.require_subcommand(1);

    SpectrumArgs sa;
    VerifyArgs va;
    ScanArgs ca;
    PlotArgs pa;

    auto* sp = app.add_subcommand("spectrum", "compute the point spectrum, emit JSON or CSV");
    sp->add_option("--gamma", sa.gamma, "boundary coupling (> 0)")
        ->required()
        ->check(CLI::PositiveNumber);
    sp->add_option("--n-max", sa.n_max, "largest mode index")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sp->add_option("--precision", sa.precision, "working precision in bits")
        ->capture_default_str()
        ->check(CLI::Range(64L, 1048576L));
    sp->add_option("--out", sa.out, "output path (default: stdout, written atomically)");
    sp->add_option("--format", sa.format, "json|csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));

    auto* vf = app.add_subcommand("verify", "run verification suites, one PASS/FAIL line each");
    vf->add_option("--gamma", va.gamma, "boundary coupling (> 0)")
        ->required()
        ->check(CLI::PositiveNumber);
    vf->add_option("--n-max", va.n_max, "largest mode index")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    vf->add_option("--suite", va.suite, "appendix|regions|symbols|all")
        ->capture_default_str()
        ->check(CLI::IsMember({"appendix", "regions", "symbols", "all"}));
    vf->add_option("--eps", va.eps, "parabolic-band exponent offset, in (0, 1/2)")
        ->capture_default_str();
    vf->add_option("--N", va.order, "axis-strip decay order")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* sc = app.add_subcommand("scan-symbols",
                                  "tabulate |c|, |d|, Im rho over a contour x r0 grid");
    sc->set_help_flag("--help", "print this help message and exit"); // frees -h for --h
    sc->add_option("--gamma", ca.gamma, "boundary coupling (> 0)")
        ->required()
        ->check(CLI::PositiveNumber);
    sc->add_option("--contour", ca.contour, "z1|z2|z3")
        ->required()
        ->check(CLI::IsMember({"z1", "z2", "z3"}));
    sc->add_option("--h", ca.h, "semiclassical parameter, in (0, 1)")->capture_default_str();
    sc->add_option("--delta", ca.delta, "z1 lower-edge exponent, in (0, 1/2)")
        ->capture_default_str();
    sc->add_option("--r0-max", ca.r0_max, "largest cotangent radius")->capture_default_str();
    sc->add_option("--grid", ca.grid, "points per axis")
        ->capture_default_str()
        ->check(CLI::Range(2, 100000));

    auto* pl = app.add_subcommand("plot", "render a spectrum JSON document as an SVG chart");
    pl->add_option("--input", pa.input, "spectrum JSON path")->required();
    pl->add_option("--eps", pa.eps, "parabolic-band exponent offset")->capture_default_str();
    pl->add_option("--N", pa.order, "axis-strip decay order")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    pl->add_option("--c-eps", pa.c_eps, "override the fitted parabolic-band constant");
    pl->add_option("--c-n", pa.c_n, "override the fitted axis-strip constant");
    pl->add_option("--out", pa.out, "output path (default: stdout, written atomically)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (sp->parsed()) return run_spectrum(sa);
        if (vf->parsed()) return run_verify(va);
        if (sc->parsed()) return run_scan(ca);
        if (pl->parsed()) return run_plot(pa);
    } catch (const ConvergenceFailure& e) {
        std::fprintf(stderr, "error: convergence failure: %s\n", e.what());
        return exit_numerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    }
    return exit_usage;
}

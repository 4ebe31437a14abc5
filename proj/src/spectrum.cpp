#include "ballspec/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "ballspec/hankel.hpp"
#include "ballspec/hankel_polynomial.hpp"

namespace ballspec::spectrum {

using exactpoly::Polynomial;
using exactpoly::rn_coefficients;

const char* family_name(ModeFamily f) { return f == ModeFamily::alpha ? "alpha" : "beta"; }

long default_precision(int n) {
    if (n <= 20) return 128;
    if (n <= 40) return 256;
    auto rn = rn_coefficients(n);
    long bits = static_cast<long>(mpz_sizeinbase(rn.coeffs.back().get_mpz_t(), 2));
    long p = ((bits + 128 + 63) / 64) * 64;
    return std::max(p, 256L);
}

BoundaryPolynomial boundary_polynomial(int n, const BigFloat& kappa, long precision) {
    if (n < 1) throw InvalidMode("boundary_polynomial: mode index must be >= 1");
    if (kappa.sign() <= 0)
        throw std::invalid_argument("boundary_polynomial: kappa must be > 0");
    const long prec = std::max<long>(precision, BigFloat::min_precision);

    auto rn = rn_coefficients(n);
    const BigFloat half_one_minus_kappa = (BigFloat(1.0, prec) - kappa.round_to(prec))
                                        * BigFloat(0.5, prec);
    std::vector<BigFloat> c;
    c.reserve(static_cast<size_t>(n) + 2);
    for (int m = 0; m <= n + 1; ++m) {
        BigFloat term{prec};
        if (m <= n) term = half_one_minus_kappa * BigFloat(rn.coeffs[static_cast<size_t>(m)], prec);
        if (m >= 1 && m - 1 <= n)
            term += BigFloat(static_cast<long>(m) - 1, prec)
                  * BigFloat(rn.coeffs[static_cast<size_t>(m) - 1], prec);
        c.push_back(std::move(term));
    }
    return {n, kappa.round_to(prec), Polynomial(std::move(c))};
}

namespace {

BigComplex lambda_from_root(const BigComplex& w) {
    const long prec = w.precision();
    const BigComplex minus_one{BigFloat(-1.0, prec), BigFloat(0.0, prec)};
    const BigComplex two{BigFloat(2.0, prec), BigFloat(0.0, prec)};
    return minus_one / (two * w);
}

BigComplex mu_from_root(const BigComplex& w) {
    const long prec = w.precision();
    const BigComplex i{BigFloat(0.0, prec), BigFloat(1.0, prec)};
    const BigComplex two{BigFloat(2.0, prec), BigFloat(0.0, prec)};
    return i / (two * w);
}

struct Task {
    int n;
    ModeFamily family;
};

std::vector<Eigenvalue> solve_task(double gamma, const Task& task, const SpectrumOptions& opts) {
    const long base = opts.precision > 0 ? opts.precision : default_precision(task.n);
    const long build = 2 * base;
    BigFloat kappa = task.family == ModeFamily::alpha
                         ? BigFloat(gamma, build)
                         : BigFloat(1.0, build) / BigFloat(gamma, build);

    rootfind::RootOptions ropts;
    ropts.tol_rel = opts.root_tol;
    ropts.real_tol = opts.real_tol;

    std::vector<rootfind::CertifiedRoot> roots;
    BoundaryPolynomial bp = boundary_polynomial(task.n, kappa, build);
    try {
        ropts.precision = base;
        roots = rootfind::find_all_roots(bp.q, ropts);
    } catch (const ConvergenceFailure&) {
        ropts.precision = 2 * base; // one automatic precision doubling
        try {
            roots = rootfind::find_all_roots(bp.q, ropts);
        } catch (const ConvergenceFailure& e) {
            throw ConvergenceFailure(e.index, "mode n=" + std::to_string(task.n) + " family="
                                                  + family_name(task.family) + ": " + e.what());
        }
    }

    std::vector<Eigenvalue> out;
    const BigFloat accept(opts.real_tol, base);
    for (const auto& r : roots) {
        if (!(r.w.re > accept)) continue; // strictly right of the axis only
        Eigenvalue ev;
        ev.lambda = lambda_from_root(r.w);
        ev.n = task.n;
        ev.family = task.family;
        ev.multiplicity = 2 * task.n + 1;
        ev.w0 = r.w;
        ev.mu = mu_from_root(r.w);
        ev.residual_poly = r.residual_rel;
        ev.residual_hankel = hankel::boundary_residual(task.n, kappa, ev.mu);
        ev.is_real = r.is_real;
        out.push_back(std::move(ev));
    }
    return out;
}

void sort_eigenvalues(std::vector<Eigenvalue>& evs) {
    std::sort(evs.begin(), evs.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        if (a.lambda.re != b.lambda.re) return b.lambda.re < a.lambda.re; // Re descending
        if (a.n != b.n) return a.n < b.n;
        if (a.family != b.family) return a.family == ModeFamily::alpha;
        return a.lambda.im < b.lambda.im;
    });
}

} // namespace

std::vector<Eigenvalue> eigenvalues_ball(double gamma, int n_max, const SpectrumOptions& opts) {
    if (!(gamma > 0.0)) throw std::invalid_argument("eigenvalues_ball: gamma must be > 0");
    if (n_max < 1) throw std::invalid_argument("eigenvalues_ball: n_max must be >= 1");
    if (std::abs(gamma - 1.0) <= 1e-14) return {};

    std::vector<Task> tasks;
    tasks.reserve(2 * static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        tasks.push_back({n, ModeFamily::alpha});
        tasks.push_back({n, ModeFamily::beta});
    }

    std::vector<std::vector<Eigenvalue>> results(tasks.size());
    std::exception_ptr failure;
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};

    unsigned hw = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    unsigned nthreads = std::clamp<unsigned>(hw, 1u, static_cast<unsigned>(tasks.size()));

    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size() || failed.load()) break;
            try {
                results[i] = solve_task(gamma, tasks[i], opts);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                break;
            }
        }
    };

    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Eigenvalue> all;
    for (auto& chunk : results)
        for (auto& ev : chunk) all.push_back(std::move(ev));
    sort_eigenvalues(all);
    return all;
}

double lambda1_closed_form(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("lambda1_closed_form: gamma must be > 0");
    if (std::abs(gamma - 1.0) <= 1e-14) throw GammaIsOne("lambda1_closed_form: gamma = 1");
    const double g0 = std::max(gamma, 1.0 / gamma);
    return -2.0 / ((g0 - 1.0) * (1.0 + std::sqrt(1.0 + 4.0 / (g0 - 1.0))));
}

double real_eigenvalue_bound(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("real_eigenvalue_bound: gamma must be > 0");
    if (std::abs(gamma - 1.0) <= 1e-14) throw GammaIsOne("real_eigenvalue_bound: gamma = 1");
    const double g0 = std::max(gamma, 1.0 / gamma);
    return -1.0 / std::max(g0 - 1.0, std::sqrt(g0 - 1.0));
}

double complex_root_certificate(int n, double gamma, std::complex<double> w0,
                                std::span<const std::complex<double>> roots) {
    if (!(gamma > 1.0)) throw InvalidGamma("complex_root_certificate: gamma must be > 1");
    if (n < 1) throw InvalidMode("complex_root_certificate: mode index must be >= 1");
    if (!(w0.real() > 0.0))
        throw std::invalid_argument("complex_root_certificate: Re w0 must be > 0");
    if (w0.imag() == 0.0)
        throw std::invalid_argument("complex_root_certificate: Im w0 must be nonzero");
    if (roots.size() != static_cast<size_t>(n))
        throw std::invalid_argument("complex_root_certificate: expected n roots");

    double b = (gamma - 1.0) / (2.0 * std::norm(w0));
    for (const auto& z : roots) b -= z.real() / std::norm(w0 - z);
    for (const auto& z : roots) {
        if (z.imag() > 0.0) {
            const double im2 = z.imag() * z.imag();
            b += 4.0 * w0.real() * im2 / (std::norm(w0 - z) * std::norm(w0 - std::conj(z)));
        }
    }
    return b;
}

std::vector<std::complex<double>> rn_roots(int n, long precision) {
    auto rn = rn_coefficients(n);
    const long prec = precision > 0 ? precision : default_precision(n);
    Polynomial p = Polynomial::from_integers(rn.coeffs, 2 * prec);
    rootfind::RootOptions ropts;
    ropts.precision = prec;
    auto roots = rootfind::find_all_roots(p, ropts);
    std::vector<std::complex<double>> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.push_back(r.w.to_std());
    return out;
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status != CheckStatus::fail; });
}

namespace {

CheckResult make_result(std::string name, bool ok, double margin, std::string detail) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, margin,
            std::move(detail)};
}

} // namespace

VerifyReport verify_appendix(double gamma, int n_max, const SpectrumOptions& opts) {
    if (!(gamma > 0.0)) throw std::invalid_argument("verify_appendix: gamma must be > 0");
    if (n_max < 1) throw std::invalid_argument("verify_appendix: n_max must be >= 1");

    VerifyReport rep;
    rep.gamma = gamma;
    rep.n_max = n_max;

    // (a) the coupling-one spectrum is empty
    {
        auto empty = eigenvalues_ball(1.0, n_max, opts);
        rep.checks.push_back(make_result("empty-spectrum-at-unit-coupling", empty.empty(),
                                         -static_cast<double>(empty.size()),
                                         "eigenvalues found: " + std::to_string(empty.size())));
    }
    const bool gamma_is_one = std::abs(gamma - 1.0) <= 1e-14;
    if (gamma_is_one) {
        for (const char* name :
             {"first-eigenvalue-closed-form", "real-eigenvalue-bound", "dominant-family-real",
              "per-mode-existence", "complex-argument-region", "coupling-inversion-symmetry"})
            rep.checks.push_back({name, CheckStatus::skipped, 0.0, "coupling is 1"});
        return rep;
    }

    auto evs = eigenvalues_ball(gamma, n_max, opts);
    const double lam1 = lambda1_closed_form(gamma);
    const double bound = real_eigenvalue_bound(gamma);
    const ModeFamily dominant = gamma > 1.0 ? ModeFamily::alpha : ModeFamily::beta;

    // (b) first eigenvalue against the closed form
    {
        bool ok = false;
        double margin = -1.0;
        std::string detail = "spectrum is empty";
        if (!evs.empty() && evs.front().is_real) {
            const double lead = evs.front().lambda.re.to_double();
            const double rel = std::abs(lead - lam1) / std::abs(lam1);
            ok = rel <= 1e-10;
            margin = 1e-10 - rel;
            detail = "relative error " + std::to_string(rel);
        }
        rep.checks.push_back(make_result("first-eigenvalue-closed-form", ok, margin, detail));
    }

    // (c) every other real eigenvalue obeys the bound
    {
        bool ok = true;
        double worst = std::numeric_limits<double>::infinity();
        int above = 0;
        for (const auto& ev : evs) {
            if (!ev.is_real) continue;
            const double lam = ev.lambda.re.to_double();
            if (std::abs(lam - lam1) <= 1e-9 * (1.0 + std::abs(lam1))) continue; // the exception
            const double margin = bound + 1e-12 - lam;
            worst = std::min(worst, margin);
            if (margin < 0.0) {
                ok = false;
                ++above;
            }
        }
        if (!std::isfinite(worst)) worst = 0.0;
        rep.checks.push_back(make_result("real-eigenvalue-bound", ok, worst,
                                         above ? std::to_string(above) + " above bound"
                                               : "all below"));
    }

    // (d) dominant family: accepted roots real, probe bracket positive
    {
        bool ok = true;
        double min_bracket = std::numeric_limits<double>::infinity();
        int nonreal = 0;
        for (const auto& ev : evs)
            if (ev.family == dominant && !ev.is_real) ++nonreal;
        if (nonreal > 0) ok = false;
        const double g0 = std::max(gamma, 1.0 / gamma);
        for (int n = 1; n <= n_max; ++n) {
            auto roots = rn_roots(n);
            std::mt19937 rng(0x9e3779b9u ^ static_cast<unsigned>(n));
            std::uniform_real_distribution<double> re_dist(1e-3, 3.0);
            std::uniform_real_distribution<double> im_dist(0.05, 3.0);
            std::bernoulli_distribution flip(0.5);
            for (int k = 0; k < 100; ++k) {
                double re = re_dist(rng);
                double im = im_dist(rng);
                if (flip(rng)) im = -im;
                const double b = complex_root_certificate(n, g0, {re, im}, roots);
                min_bracket = std::min(min_bracket, b);
                if (!(b > 0.0)) ok = false;
            }
        }
        rep.checks.push_back(make_result(
            "dominant-family-real", ok, min_bracket,
            nonreal ? std::to_string(nonreal) + " non-real accepted roots" : "min bracket"));
    }

    // (e) per-mode existence through the sign change of q_n
    {
        bool ok = true;
        std::string detail = "all modes populated";
        const long prec = 128;
        const BigFloat kap =
            gamma > 1.0 ? BigFloat(gamma, prec) : BigFloat(1.0, prec) / BigFloat(gamma, prec);
        for (int n = 1; n <= n_max && ok; ++n) {
            auto bp = boundary_polynomial(n, kap, prec);
            const BigComplex zero = BigComplex::zero(prec);
            if (!(bp.q.eval(zero).value.re.sign() < 0)) {
                ok = false;
                detail = "q(0) not negative at n=" + std::to_string(n);
                break;
            }
            bool positive_found = false;
            BigComplex probe{BigFloat(1.0, prec), BigFloat(0.0, prec)};
            for (int doublings = 0; doublings < 60; ++doublings) {
                if (bp.q.eval(probe).value.re.sign() > 0) {
                    positive_found = true;
                    break;
                }
                probe.re *= BigFloat(2.0, prec);
            }
            int count = 0;
            for (const auto& ev : evs)
                if (ev.n == n && ev.family == dominant && ev.is_real) ++count;
            if (!positive_found || count < 1) {
                ok = false;
                detail = "mode n=" + std::to_string(n) + (positive_found
                             ? " has no accepted real eigenvalue"
                             : " shows no sign change");
            }
        }
        rep.checks.push_back(make_result("per-mode-existence", ok, ok ? 1.0 : -1.0, detail));
    }

    // (f) complex eigenvalues confined to the wide-argument region
    {
        bool ok = true;
        int complex_count = 0;
        double worst = std::numbers::pi; // best possible excess over pi/4
        for (const auto& ev : evs) {
            if (ev.is_real) continue;
            ++complex_count;
            const auto lam = ev.lambda.to_std();
            const double a = std::atan2(std::abs(lam.imag()), lam.real());
            const double excess = std::abs(a - std::numbers::pi) - std::numbers::pi / 4.0;
            worst = std::min(worst, excess);
            if (!(excess > 0.0)) ok = false;
        }
        rep.checks.push_back(make_result("complex-argument-region", ok,
                                         complex_count ? worst : 0.0,
                                         "complex eigenvalues: " + std::to_string(complex_count)));
    }

    // (g) coupling inversion symmetry (multisets match, families swapped)
    {
        auto mirror = eigenvalues_ball(1.0 / gamma, n_max, opts);
        bool ok = mirror.size() == evs.size();
        double worst = 0.0;
        int coincidences = 0;
        if (ok) {
            for (size_t i = 0; i < evs.size(); ++i) {
                const auto a = evs[i].lambda.to_std();
                const auto b = mirror[i].lambda.to_std();
                worst = std::max(worst, std::abs(a - b));
                if (evs[i].n != mirror[i].n || evs[i].family == mirror[i].family
                    || evs[i].multiplicity != mirror[i].multiplicity)
                    ok = false;
            }
            if (worst > 1e-9) ok = false;
            for (size_t i = 1; i < evs.size(); ++i) {
                const auto a = evs[i - 1].lambda.to_std();
                const auto b = evs[i].lambda.to_std();
                if (std::abs(a - b) <= 1e-9) ++coincidences;
            }
        }
        rep.checks.push_back(make_result("coupling-inversion-symmetry", ok, 1e-9 - worst,
                                         "max pair distance " + std::to_string(worst)
                                             + ", coincidences " + std::to_string(coincidences)));
    }

    return rep;
}

} // namespace ballspec::spectrum

#include "ballspec/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ballspec::rootfind {

using exactpoly::Polynomial;

namespace {

// Fujiwara bound on root moduli of sum c_m w^m, computed in log2 space since
// the coefficients can exceed double range.
double fujiwara_radius(const std::vector<BigFloat>& c) {
    const size_t d = c.size() - 1;
    const double lead = log2_magnitude(c[d]);
    double best = -std::numeric_limits<double>::infinity();
    for (size_t k = 1; k <= d; ++k) {
        const BigFloat& a = c[d - k];
        if (a.is_zero()) continue;
        double t = log2_magnitude(a) - lead;
        if (k == d) t -= 1.0; // the constant term enters halved
        best = std::max(best, t / static_cast<double>(k));
    }
    if (!std::isfinite(best)) return 1.0; // monomial: all roots at 0
    return 2.0 * std::exp2(best);
}

void aberth_iterate(const std::vector<BigFloat>& monic, std::vector<BigComplex>& w, long prec,
                    int max_sweeps) {
    const size_t d = w.size();
    Polynomial p{std::vector<BigFloat>(monic)};
    const BigFloat one{1.0, prec};
    // Half the working precision is deep inside the Newton basin; the
    // doubled-precision polish afterwards supplies the remaining digits,
    // while demanding full precision here would stall on rounding noise.
    const double stop_log2 = -static_cast<double>(prec) / 2.0;
    BigComplex pv = BigComplex::zero(prec), dv = pv, s = pv;
    mpfr_t t1, t2, n2, q;
    mpfr_inits2(prec, t1, t2, n2, q, static_cast<mpfr_ptr>(nullptr));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < d; ++i) {
            p.eval_with_derivative(w[i], pv, dv);
            if (pv.is_zero()) continue;
            if (dv.is_zero()) {
                // sitting on a critical point: nudge and retry next sweep
                w[i].re += BigFloat(std::ldexp(1.0, -static_cast<int>(prec / 2)), prec);
                worst = 0.0;
                continue;
            }
            BigComplex newton = pv / dv;
            // s = sum over partners of 1/(w_i - w_j), on raw scratch
            mpfr_set_zero(s.re.raw(), 1);
            mpfr_set_zero(s.im.raw(), 1);
            bool collision = false;
            for (size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                mpfr_sub(t1, w[i].re.raw(), w[j].re.raw(), MPFR_RNDN);
                mpfr_sub(t2, w[i].im.raw(), w[j].im.raw(), MPFR_RNDN);
                mpfr_fmma(n2, t1, t1, t2, t2, MPFR_RNDN);
                if (mpfr_zero_p(n2)) {
                    collision = true;
                    break;
                }
                mpfr_div(q, t1, n2, MPFR_RNDN);
                mpfr_add(s.re.raw(), s.re.raw(), q, MPFR_RNDN);
                mpfr_div(q, t2, n2, MPFR_RNDN);
                mpfr_sub(s.im.raw(), s.im.raw(), q, MPFR_RNDN);
            }
            if (collision) {
                w[i].re += BigFloat(std::ldexp(1.0, -static_cast<int>(prec / 3)), prec);
                worst = 0.0;
                continue;
            }
            BigComplex denom = BigComplex(one) - newton * s;
            BigComplex step = denom.is_zero() ? newton : newton / denom;
            w[i] -= step;
            double rel = log2_magnitude(abs(step)) - log2_magnitude(one + abs(w[i]));
            worst = std::max(worst, rel);
        }
        if (worst <= stop_log2) break;
    }
    mpfr_clears(t1, t2, n2, q, static_cast<mpfr_ptr>(nullptr));
}

bool near_real(const BigComplex& w, double real_tol) {
    BigFloat thresh = BigFloat(real_tol, w.precision()) * (BigFloat(1.0, w.precision()) + abs(w));
    return abs(w.im) <= thresh;
}

void snap_and_pair(std::vector<BigComplex>& w, double real_tol) {
    const long prec = w.empty() ? 53 : w[0].precision();
    std::vector<size_t> order(w.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (w[a].re != w[b].re) return w[a].re < w[b].re;
        return w[a].im < w[b].im;
    });

    std::vector<bool> paired(w.size(), false);
    std::vector<size_t> complex_ids;
    for (size_t idx : order) {
        if (near_real(w[idx], real_tol)) {
            w[idx].im = BigFloat{prec};
            paired[idx] = true;
        } else {
            complex_ids.push_back(idx);
        }
    }
    // Greedy conjugate matching in deterministic order; enforce exact
    // symmetry by averaging each root with its partner's conjugate.
    for (size_t i : complex_ids) {
        if (paired[i]) continue;
        size_t best = i;
        BigFloat best_dist{prec};
        bool found = false;
        for (size_t j : complex_ids) {
            if (j == i || paired[j]) continue;
            BigFloat dist = abs(conj(w[i]) - w[j]);
            if (!found || dist < best_dist) {
                best = j;
                best_dist = dist;
                found = true;
            }
        }
        if (!found) {
            // odd one out of a real polynomial: force onto the axis
            w[i].im = BigFloat{prec};
            paired[i] = true;
            continue;
        }
        BigFloat half{0.5, prec};
        BigComplex m{(w[i].re + w[best].re) * half, (w[i].im - w[best].im) * half};
        w[i] = m;
        w[best] = conj(m);
        paired[i] = paired[best] = true;
    }
}

} // namespace

std::vector<CertifiedRoot> find_all_roots(const Polynomial& p, const RootOptions& opts) {
    const auto& c = p.coeffs();
    if (p.degree() < 1) throw std::invalid_argument("find_all_roots: degree must be >= 1");
    if (c.back().is_zero())
        throw std::invalid_argument("find_all_roots: leading coefficient must be nonzero");

    const long prec = std::max<long>(opts.precision, BigFloat::min_precision);
    const long hi = 2 * prec;

    // Deflate exact roots at the origin (leading run of zero coefficients).
    size_t zeros = 0;
    while (zeros < c.size() - 1 && c[zeros].is_zero()) ++zeros;

    std::vector<CertifiedRoot> out;
    for (size_t k = 0; k < zeros; ++k)
        out.push_back({BigComplex::zero(hi), 0.0, true, hi});

    std::vector<BigFloat> work(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    const size_t d = work.size() - 1;
    if (d > 0) {
        // Normalize by the largest coefficient magnitude to tame the spread,
        // then make monic for the iteration; both rescalings leave roots and
        // relative residuals unchanged.
        BigFloat biggest = abs(work[0]);
        for (const auto& a : work) biggest = max(biggest, abs(a));
        std::vector<BigFloat> monic;
        monic.reserve(work.size());
        for (const auto& a : work) monic.push_back((a / biggest).round_to(prec));
        BigFloat lead = monic.back();
        for (auto& a : monic) a /= lead;

        std::vector<BigComplex> w;
        w.reserve(d);
        const double radius = fujiwara_radius(monic);
        for (size_t i = 0; i < d; ++i) {
            // perturbed circle: irrational angular offset avoids axis traps
            double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(d)
                         + 0.5 / static_cast<double>(d) + 0.61803398875;
            w.emplace_back(radius * std::cos(theta), radius * std::sin(theta), prec);
        }
        aberth_iterate(monic, w, prec, opts.max_sweeps);
        snap_and_pair(w, opts.real_tol);

        // Newton polish against the undeflated input coefficients at doubled
        // precision; conjugate partners traverse identical instruction
        // sequences, so exact pairing survives refinement.
        Polynomial refined{std::vector<BigFloat>(work)};
        BigComplex pv = BigComplex::zero(hi), dv = pv;
        BigFloat scale{hi};
        for (size_t i = 0; i < d; ++i) {
            BigComplex x = w[i].round_to(hi);
            double res;
            for (int it = 0;; ++it) {
                refined.eval_full(x, pv, dv, scale);
                res = scale.is_zero() ? 0.0 : (abs(pv) / scale).to_double();
                if (res < opts.tol_rel || it >= opts.max_refine || dv.is_zero()) break;
                x -= pv / dv;
            }
            if (!(res < opts.tol_rel))
                throw ConvergenceFailure(static_cast<int>(i),
                                         "root refinement stalled above tolerance");
            CertifiedRoot r;
            r.w = x;
            r.residual_rel = res;
            r.is_real = x.im.is_zero() || near_real(x, opts.real_tol);
            if (r.is_real && !x.im.is_zero()) r.w.im = BigFloat{hi};
            r.refined_precision = hi;
            out.push_back(std::move(r));
        }
    }

    std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        if (a.w.re != b.w.re) return a.w.re < b.w.re;
        return a.w.im < b.w.im;
    });
    return out;
}

std::vector<std::complex<double>> convex_hull_2d(std::vector<std::complex<double>> pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull_2d: need at least one point");
    auto lt = [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    std::sort(pts.begin(), pts.end(), lt);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    auto cross = [](const std::complex<double>& o, const std::complex<double>& a,
                    const std::complex<double>& b) {
        return (a.real() - o.real()) * (b.imag() - o.imag())
             - (a.imag() - o.imag()) * (b.real() - o.real());
    };
    std::vector<std::complex<double>> hull(2 * pts.size());
    size_t k = 0;
    for (const auto& pt : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
        hull[k++] = pt;
    }
    for (size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
    return hull;
}

namespace {

double segment_distance(std::complex<double> q, std::complex<double> a, std::complex<double> b) {
    const std::complex<double> ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(q - a);
    double t = ((q.real() - a.real()) * ab.real() + (q.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(q - (a + t * ab));
}

} // namespace

bool point_in_hull(std::complex<double> q, const std::vector<std::complex<double>>& hull,
                   double tol) {
    if (hull.empty()) throw std::invalid_argument("point_in_hull: empty hull");
    if (hull.size() == 1) return std::abs(q - hull[0]) <= tol;
    if (hull.size() >= 3) {
        bool inside = true;
        for (size_t i = 0; i < hull.size(); ++i) {
            const auto& a = hull[i];
            const auto& b = hull[(i + 1) % hull.size()];
            const double cr = (b.real() - a.real()) * (q.imag() - a.imag())
                            - (b.imag() - a.imag()) * (q.real() - a.real());
            if (cr < 0.0) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    double dist = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        dist = std::min(dist, segment_distance(q, a, b));
        if (hull.size() == 2) break;
    }
    return dist <= tol;
}

} // namespace ballspec::rootfind

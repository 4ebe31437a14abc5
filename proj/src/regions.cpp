#include "ballspec/regions.hpp"

#include <cmath>
#include <numbers>

namespace ballspec::regions {

namespace {

// |arg z - pi| after folding arg into [0, pi]
double folded_arg_gap(std::complex<double> z) {
    const double a = std::atan2(std::abs(z.imag()), z.real());
    return std::abs(a - std::numbers::pi);
}

} // namespace

bool in_region(std::complex<double> z, const RegionSpec& spec) {
    if (!(z.real() < 0.0)) return false;
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ParabolicBand>) {
                return std::abs(z.real())
                       <= r.c * (std::pow(std::abs(z.imag()), 0.5 + r.eps) + 1.0);
            } else if constexpr (std::is_same_v<T, AxisStrip>) {
                return std::abs(z.imag())
                       <= r.c * std::pow(std::abs(z.real()) + 1.0, -static_cast<double>(r.order));
            } else if constexpr (std::is_same_v<T, Sector>) {
                return std::abs(z) >= r.r_min && folded_arg_gap(z) <= std::numbers::pi / 4.0;
            } else {
                return std::abs(z) >= r.r_min && folded_arg_gap(z) <= std::atan(r.slope);
            }
        },
        spec);
}

BigComplex lambda_to_z(const BigComplex& lambda, double h) {
    if (!(h > 0.0)) throw InvalidParameter("lambda_to_z: h must be > 0");
    if (lambda.re.sign() > 0 || lambda.im.sign() < 0)
        throw BranchViolation("lambda_to_z: lambda must satisfy Re <= 0, Im >= 0");
    const long prec = lambda.precision();
    const BigFloat hh{h, prec};
    BigComplex z = lambda * lambda * BigComplex{hh * hh, BigFloat(0.0, prec)};
    return -z;
}

BigComplex z_to_lambda(const BigComplex& z, double h) {
    if (!(h > 0.0)) throw InvalidParameter("z_to_lambda: h must be > 0");
    if (z.im.sign() < 0) throw BranchViolation("z_to_lambda: Im z must be >= 0");
    const long prec = z.precision();
    BigComplex root = sqrt(z); // closed first quadrant for Im z >= 0
    const BigComplex i{BigFloat(0.0, prec), BigFloat(1.0, prec)};
    return i * root / BigComplex{BigFloat(h, prec), BigFloat(0.0, prec)};
}

std::vector<ContourPoint> sample_contour(Contour contour, double h, double delta, int count) {
    if (!(h > 0.0 && h < 1.0)) throw InvalidParameter("sample_contour: need 0 < h < 1");
    if (!(delta > 0.0 && delta < 0.5))
        throw InvalidParameter("sample_contour: need 0 < delta < 1/2");
    if (count < 2) throw InvalidParameter("sample_contour: need count >= 2");

    double re0, re1, im0, im1;
    switch (contour) {
        case Contour::z1:
            re0 = re1 = 1.0;
            im0 = std::pow(h, delta);
            im1 = 1.0;
            break;
        case Contour::z2:
            re0 = re1 = -1.0;
            im0 = 0.0;
            im1 = 1.0;
            break;
        default:
            re0 = -1.0;
            re1 = 1.0;
            im0 = im1 = 1.0;
            break;
    }
    std::vector<ContourPoint> pts;
    pts.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(count - 1);
        pts.push_back({contour, {re0 + t * (re1 - re0), im0 + t * (im1 - im0)}, h, delta});
    }
    return pts;
}

FittedConstants fit_constants(const std::vector<std::complex<double>>& lambdas, double eps,
                              int order) {
    if (lambdas.empty()) throw EmptyInput("fit_constants: no eigenvalues");
    if (!(eps > 0.0 && eps < 0.5))
        throw InvalidParameter("fit_constants: need 0 < eps < 1/2");
    if (order < 1) throw InvalidParameter("fit_constants: need order >= 1");

    double c_par = 0.0, c_strip = 0.0;
    for (const auto& z : lambdas) {
        if (!(z.real() < 0.0))
            throw std::invalid_argument("fit_constants: eigenvalues must have Re < 0");
        const double need_par =
            std::abs(z.real()) / (std::pow(std::abs(z.imag()), 0.5 + eps) + 1.0);
        const double need_strip =
            std::abs(z.imag()) * std::pow(std::abs(z.real()) + 1.0, static_cast<double>(order));
        if (need_par <= need_strip)
            c_par = std::max(c_par, need_par);
        else
            c_strip = std::max(c_strip, need_strip);
    }
    return {c_par, c_strip};
}

} // namespace ballspec::regions

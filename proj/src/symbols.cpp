#include "ballspec/symbols.hpp"

#include <cmath>
#include <limits>

namespace ballspec::symbols {

namespace {

std::complex<double> upper_sqrt(std::complex<double> v) {
    std::complex<double> r = std::sqrt(v);
    if (r.imag() < 0.0) r = -r;
    return r;
}

} // namespace

std::complex<double> eval_rho(double r0, std::complex<double> z) {
    if (!(r0 >= 0.0)) throw InvalidParameter("eval_rho: r0 must be >= 0");
    return upper_sqrt(z - r0);
}

std::complex<double> eval_c(double r0, std::complex<double> z, double gamma) {
    if (!(gamma > 0.0)) throw InvalidParameter("eval_c: gamma must be > 0");
    return eval_rho(r0, z) - gamma * upper_sqrt(z);
}

std::complex<double> eval_d(double r0, std::complex<double> z, double gamma) {
    if (!(gamma > 0.0)) throw InvalidParameter("eval_d: gamma must be > 0");
    return eval_rho(r0, z) - upper_sqrt(z) / gamma;
}

SymbolSample sample_symbols(double r0, std::complex<double> z, double gamma) {
    if (!(gamma > 0.0)) throw InvalidParameter("sample_symbols: gamma must be > 0");
    SymbolSample s;
    s.r0 = r0;
    s.z = z;
    s.gamma = gamma;
    s.rho = eval_rho(r0, z);
    const std::complex<double> sz = upper_sqrt(z);
    s.c = s.rho - gamma * sz;
    s.d = s.rho - sz / gamma;
    const std::complex<double> shifted = z - r0;
    s.branch_boundary = shifted.imag() == 0.0 && shifted.real() > 0.0;
    return s;
}

std::optional<double> glancing_r0(double gamma) {
    if (!(gamma > 0.0)) throw InvalidParameter("glancing_r0: gamma must be > 0");
    if (gamma >= 1.0) return std::nullopt;
    return 1.0 / (gamma * gamma) - 1.0;
}

ScanResult scan_min_modulus(BoundarySymbol symbol, double gamma, regions::Contour contour,
                            double h, double delta, double r0_max, int grid) {
    if (!(gamma > 0.0)) throw InvalidParameter("scan_min_modulus: gamma must be > 0");
    if (!(r0_max > 0.0)) throw InvalidParameter("scan_min_modulus: r0_max must be > 0");
    if (grid < 2) throw InvalidParameter("scan_min_modulus: grid must be >= 2");

    const auto pts = regions::sample_contour(contour, h, delta, grid);
    ScanResult best;
    best.min_abs = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid; ++k) {
        const double r0 = r0_max * static_cast<double>(k) / static_cast<double>(grid - 1);
        for (const auto& pt : pts) {
            const std::complex<double> v = symbol == BoundarySymbol::c
                                               ? eval_c(r0, pt.z, gamma)
                                               : eval_d(r0, pt.z, gamma);
            const double a = std::abs(v);
            if (a < best.min_abs) {
                best.min_abs = a;
                best.argmin_r0 = r0;
                best.argmin_z = pt.z;
            }
        }
    }
    return best;
}

} // namespace ballspec::symbols

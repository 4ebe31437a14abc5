#pragma once

#include <string>

#include "ballspec/spectrum_io.hpp"

namespace ballspec::io {

struct PlotOptions {
    double eps = 0.05;
    int order = 4;
    // Region constants; negative means "fit from the document's eigenvalues"
    double c_parabolic = -1.0;
    double c_strip = -1.0;
};

// Self-contained SVG 1.1 chart of the eigenvalues with the two region
// shades, axes, and labels. Byte-deterministic for fixed inputs.
std::string render_svg(const SpectrumDocument& doc, const PlotOptions& opts);

} // namespace ballspec::io

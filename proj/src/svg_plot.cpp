#include "ballspec/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "ballspec/regions.hpp"

namespace ballspec::io {

namespace {

// Fixed two-decimal coordinate formatting keeps the output byte-stable
// across platforms; "-0.00" is normalized so the sign of a rounded zero
// cannot depend on rounding direction.
std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string fmt_label(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

std::string xml_escape(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch; break;
        }
    }
    return out;
}

// Largest of {1, 2, 5} * 10^k not exceeding the raw step.
double nice_step(double raw) {
    if (!(raw > 0.0)) return 1.0;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {5.0, 2.0, 1.0}) {
        if (m * mag <= raw) return m * mag;
    }
    return 0.5 * mag;
}

struct Frame {
    double re_min, re_max, im_min, im_max;
    double x0, y0, w, h; // pixel plot area

    double px(double re) const { return x0 + (re - re_min) / (re_max - re_min) * w; }
    double py(double im) const { return y0 + (im_max - im) / (im_max - im_min) * h; }
};

void append_polygon(std::string& svg, const Frame& fr,
                    const std::vector<std::complex<double>>& pts,
                    const char* fill, const char* fill_opacity) {
    if (pts.size() < 3) return;
    svg += "  <polygon points=\"";
    bool first = true;
    for (const auto& z : pts) {
        if (!first) svg += ' ';
        first = false;
        svg += fmt2(fr.px(z.real()));
        svg += ',';
        svg += fmt2(fr.py(z.imag()));
    }
    svg += "\" fill=\"";
    svg += fill;
    svg += "\" fill-opacity=\"";
    svg += fill_opacity;
    svg += "\" stroke=\"none\" clip-path=\"url(#plotclip)\"/>\n";
}

} // namespace

std::string render_svg(const SpectrumDocument& doc, const PlotOptions& opts) {
    double c_par = opts.c_parabolic;
    double c_strip = opts.c_strip;
    if ((c_par < 0.0 || c_strip < 0.0) && !doc.eigenvalues.empty()) {
        std::vector<std::complex<double>> pts;
        pts.reserve(doc.eigenvalues.size());
        for (const auto& e : doc.eigenvalues) pts.emplace_back(e.re, e.im);
        regions::FittedConstants fc = regions::fit_constants(pts, opts.eps, opts.order);
        if (c_par < 0.0) c_par = fc.c_parabolic;
        if (c_strip < 0.0) c_strip = fc.c_strip;
    }
    // Nothing to fit against: fall back to unit constants so an empty
    // document still shows the two region shapes.
    if (c_par < 0.0) c_par = 1.0;
    if (c_strip < 0.0) c_strip = 1.0;

    double re_lo = -1.0, re_hi = 0.0, im_lo = -1.0, im_hi = 1.0;
    if (!doc.eigenvalues.empty()) {
        re_lo = 0.0;
        im_lo = im_hi = 0.0;
        for (const auto& e : doc.eigenvalues) {
            re_lo = std::min(re_lo, e.re);
            re_hi = std::max(re_hi, e.re);
            im_lo = std::min(im_lo, e.im);
            im_hi = std::max(im_hi, e.im);
        }
    }
    // Pad so markers on the extremes do not sit on the border; keep the
    // imaginary axis visible on the right.
    double re_span = std::max(re_hi - re_lo, 1e-3);
    double im_span = std::max(im_hi - im_lo, 1e-3);
    re_lo -= 0.08 * re_span;
    re_hi += 0.08 * re_span;
    im_lo -= 0.10 * im_span;
    im_hi += 0.10 * im_span;
    if (im_hi < 0.25) im_hi = 0.25;
    if (im_lo > -0.25) im_lo = -0.25;
    if (re_hi < 0.05 * re_span) re_hi = 0.05 * re_span;

    const double width = 860.0, height = 600.0;
    Frame fr{re_lo, re_hi, im_lo, im_hi, 70.0, 40.0, width - 100.0, height - 100.0};

    std::string svg;
    svg.reserve(1 << 16);
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    svg += fmt2(width);
    svg += "\" height=\"";
    svg += fmt2(height);
    svg += "\" viewBox=\"0 0 " + fmt2(width) + " " + fmt2(height) + "\">\n";
    svg += "  <defs>\n    <clipPath id=\"plotclip\"><rect x=\"" + fmt2(fr.x0) + "\" y=\"" +
           fmt2(fr.y0) + "\" width=\"" + fmt2(fr.w) + "\" height=\"" + fmt2(fr.h) +
           "\"/></clipPath>\n  </defs>\n";
    svg += "  <rect x=\"0.00\" y=\"0.00\" width=\"" + fmt2(width) + "\" height=\"" + fmt2(height) +
           "\" fill=\"#ffffff\"/>\n";

    // Shaded regions, sampled along the slowly varying coordinate.
    const int samples = 200;
    if (c_par > 0.0) {
        std::vector<std::complex<double>> poly;
        poly.reserve(2 * samples + 2);
        for (int i = 0; i <= samples; ++i) {
            double im = im_lo + (im_hi - im_lo) * i / samples;
            double bound = c_par * (std::pow(std::abs(im), 0.5 + opts.eps) + 1.0);
            poly.emplace_back(std::max(-bound, re_lo), im);
        }
        poly.emplace_back(0.0, im_hi);
        poly.emplace_back(0.0, im_lo);
        append_polygon(svg, fr, poly, "#9467bd", "0.18");
    }
    if (c_strip > 0.0) {
        std::vector<std::complex<double>> poly;
        poly.reserve(2 * samples + 2);
        for (int i = 0; i <= samples; ++i) {
            double re = re_lo + (0.0 - re_lo) * i / samples;
            poly.emplace_back(re, c_strip * std::pow(std::abs(re) + 1.0, -opts.order));
        }
        for (int i = samples; i >= 0; --i) {
            double re = re_lo + (0.0 - re_lo) * i / samples;
            poly.emplace_back(re, -c_strip * std::pow(std::abs(re) + 1.0, -opts.order));
        }
        append_polygon(svg, fr, poly, "#2ca02c", "0.22");
    }

    // Grid and ticks.
    double xstep = nice_step((fr.re_max - fr.re_min) / 6.0);
    double ystep = nice_step((fr.im_max - fr.im_min) / 6.0);
    svg += "  <g stroke=\"#dddddd\" stroke-width=\"1.00\">\n";
    for (double t = std::ceil(fr.re_min / xstep) * xstep; t <= fr.re_max + 1e-12 * xstep; t += xstep) {
        double x = fr.px(t);
        svg += "    <line x1=\"" + fmt2(x) + "\" y1=\"" + fmt2(fr.y0) + "\" x2=\"" + fmt2(x) +
               "\" y2=\"" + fmt2(fr.y0 + fr.h) + "\"/>\n";
    }
    for (double t = std::ceil(fr.im_min / ystep) * ystep; t <= fr.im_max + 1e-12 * ystep; t += ystep) {
        double y = fr.py(t);
        svg += "    <line x1=\"" + fmt2(fr.x0) + "\" y1=\"" + fmt2(y) + "\" x2=\"" +
               fmt2(fr.x0 + fr.w) + "\" y2=\"" + fmt2(y) + "\"/>\n";
    }
    svg += "  </g>\n";

    // Zero axes inside the plot, when visible.
    svg += "  <g stroke=\"#888888\" stroke-width=\"1.00\">\n";
    if (fr.re_min < 0.0 && fr.re_max > 0.0) {
        double x = fr.px(0.0);
        svg += "    <line x1=\"" + fmt2(x) + "\" y1=\"" + fmt2(fr.y0) + "\" x2=\"" + fmt2(x) +
               "\" y2=\"" + fmt2(fr.y0 + fr.h) + "\"/>\n";
    }
    if (fr.im_min < 0.0 && fr.im_max > 0.0) {
        double y = fr.py(0.0);
        svg += "    <line x1=\"" + fmt2(fr.x0) + "\" y1=\"" + fmt2(y) + "\" x2=\"" +
               fmt2(fr.x0 + fr.w) + "\" y2=\"" + fmt2(y) + "\"/>\n";
    }
    svg += "  </g>\n";

    // Markers.
    svg += "  <g clip-path=\"url(#plotclip)\">\n";
    for (const auto& e : doc.eigenvalues) {
        const char* color = (e.family == "alpha") ? "#1f77b4" : "#d62728";
        svg += "    <circle cx=\"" + fmt2(fr.px(e.re)) + "\" cy=\"" + fmt2(fr.py(e.im)) +
               "\" r=\"3.50\" fill=\"" + color + "\" fill-opacity=\"0.85\"/>\n";
    }
    svg += "  </g>\n";

    // Frame on top of the shading.
    svg += "  <rect x=\"" + fmt2(fr.x0) + "\" y=\"" + fmt2(fr.y0) + "\" width=\"" + fmt2(fr.w) +
           "\" height=\"" + fmt2(fr.h) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.00\"/>\n";

    // Tick labels.
    svg += "  <g font-family=\"sans-serif\" font-size=\"12.00\" fill=\"#000000\">\n";
    for (double t = std::ceil(fr.re_min / xstep) * xstep; t <= fr.re_max + 1e-12 * xstep; t += xstep) {
        svg += "    <text x=\"" + fmt2(fr.px(t)) + "\" y=\"" + fmt2(fr.y0 + fr.h + 16.0) +
               "\" text-anchor=\"middle\">" + xml_escape(fmt_label(t)) + "</text>\n";
    }
    for (double t = std::ceil(fr.im_min / ystep) * ystep; t <= fr.im_max + 1e-12 * ystep; t += ystep) {
        svg += "    <text x=\"" + fmt2(fr.x0 - 8.0) + "\" y=\"" + fmt2(fr.py(t) + 4.0) +
               "\" text-anchor=\"end\">" + xml_escape(fmt_label(t)) + "</text>\n";
    }
    svg += "  </g>\n";

    // Axis titles and header.
    char head[160];
    std::snprintf(head, sizeof(head), "eigenvalues: gamma = %s, n_max = %d, count = %zu",
                  fmt_label(doc.gamma).c_str(), doc.n_max, doc.eigenvalues.size());
    svg += "  <text x=\"" + fmt2(fr.x0) + "\" y=\"24.00\" font-family=\"sans-serif\" "
           "font-size=\"15.00\" fill=\"#000000\">" + xml_escape(head) + "</text>\n";
    svg += "  <text x=\"" + fmt2(fr.x0 + fr.w / 2.0) + "\" y=\"" + fmt2(height - 12.0) +
           "\" font-family=\"sans-serif\" font-size=\"13.00\" text-anchor=\"middle\" "
           "fill=\"#000000\">Re</text>\n";
    svg += "  <text x=\"20.00\" y=\"" + fmt2(fr.y0 + fr.h / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"13.00\" text-anchor=\"middle\" "
           "fill=\"#000000\" transform=\"rotate(-90 20.00 " + fmt2(fr.y0 + fr.h / 2.0) +
           ")\">Im</text>\n";

    // Legend, top-right inside the frame.
    {
        double lx = fr.x0 + fr.w - 330.0;
        double ly = fr.y0 + 10.0;
        char buf[200];
        svg += "  <g font-family=\"sans-serif\" font-size=\"12.00\" fill=\"#000000\">\n";
        svg += "    <rect x=\"" + fmt2(lx - 8.0) + "\" y=\"" + fmt2(ly - 4.0) +
               "\" width=\"338.00\" height=\"86.00\" fill=\"#ffffff\" fill-opacity=\"0.85\" "
               "stroke=\"#aaaaaa\" stroke-width=\"1.00\"/>\n";
        svg += "    <circle cx=\"" + fmt2(lx + 6.0) + "\" cy=\"" + fmt2(ly + 10.0) +
               "\" r=\"3.50\" fill=\"#1f77b4\"/>\n";
        svg += "    <text x=\"" + fmt2(lx + 16.0) + "\" y=\"" + fmt2(ly + 14.0) +
               "\">alpha family (kappa = gamma)</text>\n";
        svg += "    <circle cx=\"" + fmt2(lx + 6.0) + "\" cy=\"" + fmt2(ly + 28.0) +
               "\" r=\"3.50\" fill=\"#d62728\"/>\n";
        svg += "    <text x=\"" + fmt2(lx + 16.0) + "\" y=\"" + fmt2(ly + 32.0) +
               "\">beta family (kappa = 1/gamma)</text>\n";
        std::snprintf(buf, sizeof(buf), "|Re z| <= %s (|Im z|^(1/2+%s) + 1)",
                      fmt_label(c_par).c_str(), fmt_label(opts.eps).c_str());
        svg += "    <rect x=\"" + fmt2(lx) + "\" y=\"" + fmt2(ly + 40.0) +
               "\" width=\"12.00\" height=\"12.00\" fill=\"#9467bd\" fill-opacity=\"0.18\" "
               "stroke=\"#9467bd\" stroke-width=\"1.00\"/>\n";
        svg += "    <text x=\"" + fmt2(lx + 16.0) + "\" y=\"" + fmt2(ly + 50.0) + "\">" +
               xml_escape(buf) + "</text>\n";
        std::snprintf(buf, sizeof(buf), "|Im z| <= %s (|Re z| + 1)^(-%d)",
                      fmt_label(c_strip).c_str(), opts.order);
        svg += "    <rect x=\"" + fmt2(lx) + "\" y=\"" + fmt2(ly + 58.0) +
               "\" width=\"12.00\" height=\"12.00\" fill=\"#2ca02c\" fill-opacity=\"0.22\" "
               "stroke=\"#2ca02c\" stroke-width=\"1.00\"/>\n";
        svg += "    <text x=\"" + fmt2(lx + 16.0) + "\" y=\"" + fmt2(ly + 68.0) + "\">" +
               xml_escape(buf) + "</text>\n";
        svg += "  </g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace ballspec::io

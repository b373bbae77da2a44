#include "pctk/svg.hpp"

#include <algorithm>
#include <cmath>

#include "pctk/io.hpp"

namespace pctk {

namespace {

constexpr double kSize = 640.0;
constexpr double kMarkerRadius = 4.0;

std::string num(double v) {
    // Guard against "-0" artifacts in coordinates.
    if (v == 0.0) v = 0.0;
    return format_double(v);
}

}  // namespace

std::string disc_plot_svg(std::span<const GerschgorinDisc> discs,
                          std::span<const std::complex<double>> eigenvalues) {
    if (discs.empty()) fail(Errc::BadInput, "need at least one disc to scale the plot");

    double max_radius = 0.0;
    double cx = discs.front().center.real();
    for (const auto& d : discs)
        if (d.radius > max_radius) {
            max_radius = d.radius;
            cx = d.center.real();
        }
    const double half_span = 1.1 * std::max(max_radius, 1e-12);
    const double scale = kSize / 2.0 / half_span;

    const auto px = [&](double re) { return kSize / 2.0 + (re - cx) * scale; };
    const auto py = [&](double im) { return kSize / 2.0 - im * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

    // Complex-plane axes, clipped to the viewport when in range.
    if (std::abs(0.0 - cx) <= half_span)
        out += "<line x1=\"" + num(px(0.0)) + "\" y1=\"0\" x2=\"" + num(px(0.0)) +
               "\" y2=\"640\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"0\" y1=\"" + num(py(0.0)) + "\" x2=\"640\" y2=\"" + num(py(0.0)) +
           "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    for (const auto& d : discs)
        out += "<circle cx=\"" + num(px(d.center.real())) + "\" cy=\"" + num(py(d.center.imag())) +
               "\" r=\"" + num(d.radius * scale) +
               "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";

    for (const auto& z : eigenvalues)
        out += "<circle cx=\"" + num(px(z.real())) + "\" cy=\"" + num(py(z.imag())) + "\" r=\"" +
               num(kMarkerRadius) + "\" fill=\"#d62728\"/>\n";

    out += "</svg>\n";
    return out;
}

}  // namespace pctk

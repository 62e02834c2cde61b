#include "rquant/svg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rquant/measure.hpp"

namespace rquant {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<PointQ>& points, const RenderSpec& spec) {
    if (spec.depth < 0 || spec.depth > 8)
        throw std::invalid_argument("render_svg: depth out of [0, 8]");
    if (spec.width_px < 64) throw std::invalid_argument("render_svg: width_px must be >= 64");
    if (spec.point_radius_px < 1)
        throw std::invalid_argument("render_svg: point_radius_px must be >= 1");

    const double margin = 24.0;
    const double scale = spec.width_px - 2 * margin;
    const double tri_height = std::sqrt(3.0) / 2.0;
    const int height_px = static_cast<int>(std::ceil(2 * margin + scale * tri_height));
    // mathematical orientation: flip y
    auto px = [&](double x) { return margin + scale * x; };
    auto py = [&](double y) { return height_px - margin - scale * y; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width_px) +
           "\" height=\"" + std::to_string(height_px) + "\" viewBox=\"0 0 " +
           std::to_string(spec.width_px) + " " + std::to_string(height_px) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int k = 0; k <= spec.depth; ++k) {
        double stroke = k == 0 ? 1.6 : std::max(0.35, 1.3 * std::pow(0.75, k));
        out += "<g fill=\"none\" stroke=\"#444444\" stroke-width=\"" + fmt(stroke) + "\">\n";
        for (const Word& w : words_of_length(k)) {
            Cell c = cell(w);
            out += "<polygon points=\"";
            for (int v = 0; v < 3; ++v) {
                if (v) out += " ";
                out += fmt(px(to_double(c.vertices[static_cast<size_t>(v)].x))) + "," +
                       fmt(py(to_double(c.vertices[static_cast<size_t>(v)].y)));
            }
            out += "\"/>\n";
        }
        out += "</g>\n";
    }

    out += "<g fill=\"#c0392b\" stroke=\"none\">\n";
    for (const PointQ& p : points) {
        out += "<circle cx=\"" + fmt(px(to_double(p.x))) + "\" cy=\"" + fmt(py(to_double(p.y))) +
               "\" r=\"" + std::to_string(spec.point_radius_px) + "\"/>\n";
    }
    out += "</g>\n";

    if (spec.show_labels) {
        out += "<g font-family=\"monospace\" font-size=\"12\" fill=\"#1a1a66\">\n";
        for (size_t i = 0; i < points.size(); ++i) {
            double lx = px(to_double(points[i].x)) + spec.point_radius_px + 2;
            double ly = py(to_double(points[i].y)) - spec.point_radius_px - 2;
            out += "<text x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) + "\">" + std::to_string(i + 1) +
                   "</text>\n";
        }
        out += "</g>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace rquant

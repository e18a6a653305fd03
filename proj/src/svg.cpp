#include "gspan/svg.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gspan {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Frame {
    BBox bb;
    double scale = 1, margin = 0, height = 0;

    double x(const Point& p) const { return margin + (p.x - bb.xmin) * scale; }
    // y grows downward in SVG
    double y(const Point& p) const { return height - margin - (p.y - bb.ymin) * scale; }
    std::string at(const Point& p) const { return num(x(p)) + "," + num(y(p)); }
};

std::string ring_path(const Frame& f, const std::vector<Point>& ring) {
    std::string d;
    for (std::size_t i = 0; i < ring.size(); ++i) d += (i ? " L" : "M") + f.at(ring[i]);
    return d + " Z";
}

}  // namespace

std::string render_svg(const Instance& inst, const SpannerGraph* g, const PathFn* path, const SvgOptions& opt) {
    Frame f;
    f.bb = bounding_box(inst.domain.outer.vertices);
    double w = std::max(f.bb.xmax - f.bb.xmin, 1e-12), h = std::max(f.bb.ymax - f.bb.ymin, 1e-12);
    f.margin = opt.margin;
    f.scale = (opt.width - 2 * opt.margin) / std::max(w, h);
    double width = 2 * opt.margin + w * f.scale;
    f.height = 2 * opt.margin + h * f.scale;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(f.height) << "\" viewBox=\"0 0 " << num(width) << " " << num(f.height) << "\">\n";
    out << "<g id=\"outer\" fill=\"#f4f1e8\" stroke=\"#333333\" stroke-width=\"1\">\n";
    out << "<path d=\"" << ring_path(f, inst.domain.outer.vertices) << "\"/>\n</g>\n";
    out << "<g id=\"holes\" fill=\"#c8c8c8\" stroke=\"#333333\" stroke-width=\"1\">\n";
    for (const auto& hole : inst.domain.holes) out << "<path d=\"" << ring_path(f, hole.vertices) << "\"/>\n";
    out << "</g>\n";
    if (g) {
        out << "<g id=\"edges\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"0.8\" stroke-opacity=\"0.7\">\n";
        for (const auto& e : g->edges) {
            std::vector<Point> pts;
            if (path) {
                pts = expand_edge(*g, e, *path).points;
            } else {
                pts.push_back(g->sites[e.a]);
                pts.insert(pts.end(), e.via.begin(), e.via.end());
                pts.push_back(g->sites[e.b]);
            }
            out << "<polyline points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << f.at(pts[i]);
            out << "\"/>\n";
        }
        out << "</g>\n";
        out << "<g id=\"via\" fill=\"#d9822b\" stroke=\"none\">\n";
        for (const auto& e : g->edges)
            for (const auto& p : e.via)
                out << "<rect x=\"" << num(f.x(p) - 1.5) << "\" y=\"" << num(f.y(p) - 1.5)
                    << "\" width=\"3.000\" height=\"3.000\"/>\n";
        out << "</g>\n";
    }
    out << "<g id=\"sites\" fill=\"#b22222\" stroke=\"none\">\n";
    for (const auto& p : inst.sites)
        out << "<circle cx=\"" << num(f.x(p)) << "\" cy=\"" << num(f.y(p)) << "\" r=\"" << num(opt.site_radius) << "\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace gspan

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gtorbit {

namespace {

struct Point2 {
    double x;
    double y;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string moment_map_svg(const SkeletonGraph& graph) {
    if (graph.vertices.empty() || graph.vertices[0].size() != 3)
        throw std::invalid_argument("plotting supports n = 3 only");

    const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    std::vector<Point2> pts;
    for (const auto& v : graph.vertices) {
        const double a = to_double(v[0]), b = to_double(v[1]), c = to_double(v[2]);
        pts.push_back({(a - b) / s2, (a + b - 2 * c) / s6});
    }

    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double size = 640.0, margin = 48.0;
    const double scale = (size - 2 * margin) / span;
    auto place = [&](const Point2& p) {
        return Point2{margin + (p.x - xmin) * scale, size - margin - (p.y - ymin) * scale};
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    for (const auto& e : graph.edges) {
        Point2 a = place(pts[e.u]);
        Point2 b = place(pts[e.v]);
        out += "  <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
               "\" y2=\"" + fmt(b.y) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& p : pts) {
        Point2 q = place(p);
        out += "  <circle cx=\"" + fmt(q.x) + "\" cy=\"" + fmt(q.y) +
               "\" r=\"5\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace gtorbit

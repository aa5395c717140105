#include "tilekit/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "tilekit/arrangement.hpp"
#include "tilekit/error.hpp"

namespace tilekit {

namespace {

std::string decimal(const Rational& value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value.get_d());
    return buf;
}

std::string exact_pair(const Point& p) {
    return "(" + rational_str(p.x) + "," + rational_str(p.y) + ")";
}

}  // namespace

std::string render_svg(const CSPolygon& polygon, const TranslateSet& x, const RenderSpec& spec) {
    if (!spec.window.has_area()) fail(ErrorKind::EmptyWindow, "window must have positive area");

    std::vector<Vec2> translates = overlapping_translates(polygon, x, spec.window);
    std::stable_sort(translates.begin(), translates.end(), [&](const Vec2& a, const Vec2& b) {
        Point ra = x.lattice.reduce_mod(a);
        Point rb = x.lattice.reduce_mod(b);
        if (ra != rb) return lex_less(ra, rb);
        return lex_less(a, b);
    });

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << decimal(spec.window.x0)
        << " " << decimal(-spec.window.y1) << " " << decimal(spec.window.x1 - spec.window.x0)
        << " " << decimal(spec.window.y1 - spec.window.y0) << "\">\n";
    // Flip y so the figure reads in the usual mathematical orientation.
    svg << "<g transform=\"scale(1,-1)\">\n";
    for (const Vec2& t : translates) {
        svg << "<!-- translate " << exact_pair(t) << " vertices";
        for (const Point& v : polygon.vertices()) svg << " " << exact_pair(v + t);
        svg << " -->\n";
        svg << "<polygon points=\"";
        bool first = true;
        for (const Point& v : polygon.vertices()) {
            if (!first) svg << " ";
            first = false;
            svg << decimal(v.x + t.x) << "," << decimal(v.y + t.y);
        }
        svg << "\"";
        if (spec.mode == RenderSpec::Mode::outline) {
            svg << " fill=\"none\" stroke=\"black\" stroke-width=\"" << spec.stroke_width << "\"";
        } else {
            svg << " fill=\"black\" fill-opacity=\"" << spec.fill_opacity << "\" stroke=\"none\"";
        }
        svg << "/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace tilekit

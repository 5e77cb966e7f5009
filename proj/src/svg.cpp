#include "kha/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace kha {

namespace {

std::string fmt(double v) {
    if (v == 0) v = 0;  // never print -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Box {
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool empty = true;

    void take(double x, double y) {
        if (empty) {
            minx = maxx = x;
            miny = maxy = y;
            empty = false;
            return;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
};

// Clips the infinite line through (px,py) with direction (dx,dy) to the box;
// false when the line misses it entirely.
bool clip_line(double px, double py, double dx, double dy, const Box& b, double& t0, double& t1) {
    t0 = -1e300;
    t1 = 1e300;
    auto axis = [&](double p, double d, double lo, double hi) {
        if (d == 0) return p >= lo && p <= hi;
        double a = (lo - p) / d, c = (hi - p) / d;
        if (a > c) std::swap(a, c);
        t0 = std::max(t0, a);
        t1 = std::min(t1, c);
        return t0 <= t1;
    };
    return axis(px, dx, b.minx, b.maxx) && axis(py, dy, b.miny, b.maxy);
}

}  // namespace

std::string scene_to_svg(const Scene& scene, const RenderStyle& style) {
    if (scene.empty()) fail(Errc::empty_scene, "nothing to render");

    // Lines are unbounded, so the viewport is sized by points and circles;
    // line defining points only step in for a scene of nothing but lines.
    Box box;
    for (const auto& o : scene.objects()) {
        if (const Point* p = std::get_if<Point>(&o.geom)) {
            box.take(p->x.to_double(), p->y.to_double());
        } else if (const Circle* c = std::get_if<Circle>(&o.geom)) {
            double cx = c->center().x.to_double(), cy = c->center().y.to_double();
            double r = std::sqrt(c->radius_sq().to_double());
            box.take(cx - r, cy - r);
            box.take(cx + r, cy + r);
        }
    }
    if (box.empty) {
        for (const auto& o : scene.objects()) {
            if (const Line* l = std::get_if<Line>(&o.geom)) {
                box.take(l->p().x.to_double(), l->p().y.to_double());
                box.take(l->q().x.to_double(), l->q().y.to_double());
            }
        }
    }
    double extent = std::max(box.maxx - box.minx, box.maxy - box.miny);
    if (extent <= 0) extent = 1;
    double pad = style.margin * extent;
    box.minx -= pad;
    box.miny -= pad;
    box.maxx += pad;
    box.maxy += pad;

    double stroke = style.stroke_width.value_or(0.01 * extent);
    auto color_of = [&](Role r) -> const std::string& {
        switch (r) {
            case Role::lattice: return style.lattice_color;
            case Role::figure: return style.figure_color;
            case Role::auxiliary: return style.auxiliary_color;
        }
        return style.auxiliary_color;
    };

    double w = box.maxx - box.minx, h = box.maxy - box.miny;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           fmt(box.minx) + " " + fmt(-box.maxy) + " " + fmt(w) + " " + fmt(h) + "\">\n";
    if (style.background) {
        out += "  <rect x=\"" + fmt(box.minx) + "\" y=\"" + fmt(-box.maxy) + "\" width=\"" +
               fmt(w) + "\" height=\"" + fmt(h) + "\" fill=\"" + *style.background + "\"/>\n";
    }
    out += "  <g transform=\"scale(1,-1)\">\n";

    for (const auto& o : scene.objects()) {
        const std::string& color = color_of(o.role);
        if (const Point* p = std::get_if<Point>(&o.geom)) {
            out += "    <circle cx=\"" + fmt(p->x.to_double()) + "\" cy=\"" +
                   fmt(p->y.to_double()) + "\" r=\"" + fmt(1.5 * stroke) + "\" fill=\"" + color +
                   "\" stroke=\"none\"/>\n";
        } else if (const Line* l = std::get_if<Line>(&o.geom)) {
            double px = l->p().x.to_double(), py = l->p().y.to_double();
            double dx = l->q().x.to_double() - px, dy = l->q().y.to_double() - py;
            double t0, t1;
            if (!clip_line(px, py, dx, dy, box, t0, t1)) continue;
            out += "    <line x1=\"" + fmt(px + t0 * dx) + "\" y1=\"" + fmt(py + t0 * dy) +
                   "\" x2=\"" + fmt(px + t1 * dx) + "\" y2=\"" + fmt(py + t1 * dy) +
                   "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(stroke) + "\"/>\n";
        } else {
            const Circle& c = std::get<Circle>(o.geom);
            out += "    <circle cx=\"" + fmt(c.center().x.to_double()) + "\" cy=\"" +
                   fmt(c.center().y.to_double()) + "\" r=\"" +
                   fmt(std::sqrt(c.radius_sq().to_double())) + "\" fill=\"none\" stroke=\"" +
                   color + "\" stroke-width=\"" + fmt(stroke) + "\"/>\n";
        }
    }
    out += "  </g>\n</svg>\n";
    return out;
}

}  // namespace kha

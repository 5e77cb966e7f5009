#include "kha/trace.hpp"

#include <set>

namespace kha {

namespace {

const Geometry& resolve(const std::map<std::string, Geometry>& objs, const std::string& id) {
    auto it = objs.find(id);
    if (it == objs.end()) fail(Errc::invalid_trace, "step references unknown id '" + id + "'");
    return it->second;
}

std::vector<Point> intersect_objects(const Geometry& a, const Geometry& b) {
    if (std::holds_alternative<Point>(a) || std::holds_alternative<Point>(b))
        fail(Errc::invalid_trace, "points cannot be intersected");
    if (const Line* la = std::get_if<Line>(&a)) {
        if (const Line* lb = std::get_if<Line>(&b)) {
            auto p = intersect_line_line(*la, *lb);
            if (!p) return {};
            return {*p};
        }
        return intersect_line_circle(*la, std::get<Circle>(b));
    }
    const Circle& ca = std::get<Circle>(a);
    if (const Line* lb = std::get_if<Line>(&b)) return intersect_line_circle(*lb, ca);
    return intersect_circle_circle(ca, std::get<Circle>(b));
}

}  // namespace

void validate_trace(const ConstructionTrace& trace) {
    std::set<std::string> points, lines, circles;
    auto known = [&](const std::string& id) {
        return points.count(id) || lines.count(id) || circles.count(id);
    };
    for (const auto& [id, pt] : trace.seeds) {
        (void)pt;
        if (known(id)) fail(Errc::invalid_trace, "duplicate seed id '" + id + "'");
        points.insert(id);
    }
    for (const auto& s : trace.steps) {
        if (known(s.id)) fail(Errc::invalid_trace, "duplicate step id '" + s.id + "'");
        switch (s.kind) {
            case TraceStep::Kind::line_through:
            case TraceStep::Kind::circle_through:
                if (!points.count(s.arg1) || !points.count(s.arg2))
                    fail(Errc::invalid_trace,
                         "step '" + s.id + "' references a non-point or unknown id");
                (s.kind == TraceStep::Kind::line_through ? lines : circles).insert(s.id);
                break;
            case TraceStep::Kind::intersect: {
                auto curve = [&](const std::string& id) { return lines.count(id) || circles.count(id); };
                if (!curve(s.arg1) || !curve(s.arg2))
                    fail(Errc::invalid_trace,
                         "step '" + s.id + "' intersects a non-curve or unknown id");
                bool bothLines = lines.count(s.arg1) && lines.count(s.arg2);
                int maxBranch = bothLines ? 0 : 1;
                if (s.branch < 0 || s.branch > maxBranch)
                    fail(Errc::invalid_trace, "step '" + s.id + "' has branch out of range");
                points.insert(s.id);
                break;
            }
        }
    }
}

std::map<std::string, Geometry> replay_trace(const ConstructionTrace& trace) {
    validate_trace(trace);
    std::map<std::string, Geometry> objs;
    for (const auto& [id, pt] : trace.seeds) objs.emplace(id, pt);
    for (const auto& s : trace.steps) {
        switch (s.kind) {
            case TraceStep::Kind::line_through: {
                const Point& p = std::get<Point>(resolve(objs, s.arg1));
                const Point& q = std::get<Point>(resolve(objs, s.arg2));
                objs.emplace(s.id, Line(p, q));
                break;
            }
            case TraceStep::Kind::circle_through: {
                const Point& c = std::get<Point>(resolve(objs, s.arg1));
                const Point& t = std::get<Point>(resolve(objs, s.arg2));
                objs.emplace(s.id, Circle(c, t));
                break;
            }
            case TraceStep::Kind::intersect: {
                auto pts = intersect_objects(resolve(objs, s.arg1), resolve(objs, s.arg2));
                if (s.branch >= static_cast<int>(pts.size()))
                    fail(Errc::invalid_trace,
                         "step '" + s.id + "' demands intersection branch " +
                             std::to_string(s.branch) + " of " + std::to_string(pts.size()));
                objs.emplace(s.id, pts[static_cast<size_t>(s.branch)]);
                break;
            }
        }
    }
    return objs;
}

std::string trace_to_text(const ConstructionTrace& trace) {
    std::string out;
    for (const auto& [id, pt] : trace.seeds) {
        out += "seed " + id + " = (" + pt.x.to_radical_string() + ", " + pt.y.to_radical_string() +
               ")\n";
    }
    for (const auto& s : trace.steps) {
        std::string lineText;
        switch (s.kind) {
            case TraceStep::Kind::line_through:
                lineText = "line " + s.id + " = line_through(" + s.arg1 + ", " + s.arg2 + ")";
                break;
            case TraceStep::Kind::circle_through:
                lineText = "circle " + s.id + " = circle_through(" + s.arg1 + ", " + s.arg2 + ")";
                break;
            case TraceStep::Kind::intersect:
                lineText = "point " + s.id + " = intersect(" + s.arg1 + ", " + s.arg2 + ")[" +
                           std::to_string(s.branch) + "]";
                break;
        }
        if (!s.via.empty()) lineText += "  # via " + s.via;
        out += lineText + "\n";
    }
    return out;
}

}  // namespace kha

#include "kha/sketch.hpp"

namespace kha {

std::string Sketch::fresh(const std::string& hint) {
    int& n = counters_[hint];
    for (;;) {
        std::string id = hint + std::to_string(n++);
        if (!objects_.count(id)) return id;
    }
}

std::string Sketch::store(const std::string& id, const std::string& hint, Geometry g) {
    std::string name = id.empty() ? fresh(hint) : id;
    if (objects_.count(name)) fail(Errc::duplicate_id, "sketch id '" + name + "' already used");
    objects_.emplace(name, std::move(g));
    return name;
}

std::string Sketch::seed(const Point& p, const std::string& id) {
    std::string name = store(id, "p", p);
    trace_.seeds.emplace_back(name, p);
    return name;
}

std::string Sketch::line(const std::string& pId, const std::string& qId, const std::string& via,
                         const std::string& id) {
    Line l(point_at(pId), point_at(qId));
    std::string name = store(id, "l", std::move(l));
    trace_.steps.push_back({TraceStep::Kind::line_through, name, pId, qId, 0, via});
    args_[name] = {pId, qId};
    return name;
}

std::string Sketch::circle(const std::string& centerId, const std::string& throughId,
                           const std::string& via, const std::string& id) {
    Circle c(point_at(centerId), point_at(throughId));
    std::string name = store(id, "k", std::move(c));
    trace_.steps.push_back({TraceStep::Kind::circle_through, name, centerId, throughId, 0, via});
    args_[name] = {centerId, throughId};
    return name;
}

std::vector<Point> Sketch::intersection_candidates(const std::string& aId,
                                                   const std::string& bId) const {
    const Geometry& a = at(aId);
    const Geometry& b = at(bId);
    if (std::holds_alternative<Point>(a) || std::holds_alternative<Point>(b))
        fail(Errc::no_such_intersection, "points cannot be intersected");
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

std::string Sketch::intersection(const std::string& aId, const std::string& bId, int branch,
                                 const std::string& via, const std::string& id) {
    auto pts = intersection_candidates(aId, bId);
    if (branch < 0 || branch >= static_cast<int>(pts.size()))
        fail(Errc::no_such_intersection, "intersect(" + aId + ", " + bId + ") has " +
                                             std::to_string(pts.size()) + " point(s), branch " +
                                             std::to_string(branch) + " demanded");
    std::string name = store(id, "p", pts[static_cast<size_t>(branch)]);
    trace_.steps.push_back({TraceStep::Kind::intersect, name, aId, bId, branch, via});
    return name;
}

const Geometry& Sketch::at(const std::string& id) const {
    auto it = objects_.find(id);
    if (it == objects_.end()) fail(Errc::unknown_id, "no sketch object '" + id + "'");
    return it->second;
}

const Point& Sketch::point_at(const std::string& id) const {
    const Geometry& g = at(id);
    if (const Point* p = std::get_if<Point>(&g)) return *p;
    fail(Errc::unknown_id, "'" + id + "' is not a point");
}

const Line& Sketch::line_at(const std::string& id) const {
    const Geometry& g = at(id);
    if (const Line* l = std::get_if<Line>(&g)) return *l;
    fail(Errc::unknown_id, "'" + id + "' is not a line");
}

const Circle& Sketch::circle_at(const std::string& id) const {
    const Geometry& g = at(id);
    if (const Circle* c = std::get_if<Circle>(&g)) return *c;
    fail(Errc::unknown_id, "'" + id + "' is not a circle");
}

std::pair<std::string, std::string> Sketch::args_of(const std::string& id) const {
    auto it = args_.find(id);
    if (it == args_.end()) fail(Errc::unknown_id, "no recorded arguments for '" + id + "'");
    return it->second;
}

}  // namespace kha

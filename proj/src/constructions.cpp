#include "kha/constructions.hpp"

namespace kha {

namespace {

Constructible dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

Constructible cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

Point diff(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// Picks the candidate from `both` whose offset from `base` has the requested
// dot-product sign against `ref`. Exactly one qualifies in every call site.
int pick_by_dot(const std::vector<Point>& both, const Point& base, const Point& ref,
                int wantedSign) {
    for (size_t i = 0; i < both.size(); ++i) {
        if (dot(diff(both[i], base), ref).sign() == wantedSign) return static_cast<int>(i);
    }
    fail(Errc::no_such_intersection, "no intersection branch on the demanded side");
}

}  // namespace

std::string compass_to(Sketch& sk, const std::string& centerId, const std::string& pId,
                       const std::string& qId, const std::string& id) {
    const Point& center = sk.point_at(centerId);
    const Point& p = sk.point_at(pId);
    const Point& q = sk.point_at(qId);
    if (equals(p, q)) fail(Errc::degenerate_input, "compass span between coincident points");
    const std::string via = "transfer";
    // The compass is already at an endpoint of the span: set it directly.
    if (equals(center, p)) return sk.circle(centerId, qId, via, id);
    if (equals(center, q)) return sk.circle(centerId, pId, via, id);
    // Segment transfer: equilateral apex D over (center, p), then carry |pq|
    // along the rays D->p and D->center.
    std::string c1 = sk.circle(centerId, pId, via);
    std::string c2 = sk.circle(pId, centerId, via);
    std::string apex = sk.intersection(c1, c2, 0, via);
    std::string rayP = sk.line(apex, pId, via);
    std::string spanCircle = sk.circle(pId, qId, via);
    auto gCands = sk.intersection_candidates(rayP, spanCircle);
    int gBranch = pick_by_dot(gCands, sk.point_at(pId), diff(sk.point_at(apex), sk.point_at(pId)), -1);
    std::string g = sk.intersection(rayP, spanCircle, gBranch, via);
    std::string outer = sk.circle(apex, g, via);
    std::string rayC = sk.line(apex, centerId, via);
    auto hCands = sk.intersection_candidates(rayC, outer);
    int hBranch = pick_by_dot(hCands, sk.point_at(apex), diff(center, sk.point_at(apex)), 1);
    std::string h = sk.intersection(rayC, outer, hBranch, via);
    return sk.circle(centerId, h, via, id);
}

MidpointIds midpoint_and_bisector(Sketch& sk, const std::string& pId, const std::string& qId,
                                  const std::string& midpointId, const std::string& bisectorId) {
    if (equals(sk.point_at(pId), sk.point_at(qId)))
        fail(Errc::degenerate_input, "midpoint of coincident points");
    const std::string via = "midpoint";
    std::string c1 = sk.circle(pId, qId, via);
    std::string c2 = sk.circle(qId, pId, via);
    std::string r = sk.intersection(c1, c2, 0, via);
    std::string s = sk.intersection(c1, c2, 1, via);
    std::string bisector = sk.line(r, s, via, bisectorId);
    std::string base = sk.line(pId, qId, via);
    std::string mid = sk.intersection(bisector, base, 0, via, midpointId);
    return {mid, bisector};
}

std::string perpendicular_from_point(Sketch& sk, const std::string& lineId,
                                     const std::string& pointId, const std::string& id) {
    const Line& l = sk.line_at(lineId);
    const Point& p = sk.point_at(pointId);
    auto [lpId, lqId] = sk.args_of(lineId);
    const std::string via = "perp";

    // Auxiliary circle about p cutting l twice: through the farther defining
    // point of l, or through either distinct one when p lies on l.
    std::string cutThrough;
    if (incidence(p, l)) {
        cutThrough = equals(p, sk.point_at(lpId)) ? lqId : lpId;
    } else {
        Constructible dp = dist_sq(p, sk.point_at(lpId));
        Constructible dq = dist_sq(p, sk.point_at(lqId));
        cutThrough = (dq - dp).sign() >= 0 ? lqId : lpId;
    }
    std::string aux = sk.circle(pointId, cutThrough, via);
    std::string u = sk.intersection(lineId, aux, 0, via);
    std::string v = sk.intersection(lineId, aux, 1, via);
    // Perpendicular bisector of the two cut points passes through p.
    std::string cu = sk.circle(u, v, via);
    std::string cv = sk.circle(v, u, via);
    std::string r = sk.intersection(cu, cv, 0, via);
    std::string s = sk.intersection(cu, cv, 1, via);
    return sk.line(r, s, via, id);
}

std::string transfer_distance(Sketch& sk, const std::string& pId, const std::string& qId,
                              const std::string& alongId, const std::string& fromId,
                              Direction side, const std::string& id) {
    const Line& along = sk.line_at(alongId);
    const Point& from = sk.point_at(fromId);
    if (!incidence(from, along))
        fail(Errc::degenerate_input, "transfer start point not on the carrier line");
    if (equals(sk.point_at(pId), sk.point_at(qId)))
        fail(Errc::degenerate_input, "transfer of a zero-length segment");
    std::string c = compass_to(sk, fromId, pId, qId);
    // The center lies on the line, so there are exactly two intersections in
    // parameter order; forward is the larger parameter.
    int branch = side == Direction::forward ? 1 : 0;
    return sk.intersection(alongId, c, branch, "transfer", id);
}

std::string copy_angle(Sketch& sk, const std::string& vertexId, const std::string& arm1Id,
                       const std::string& arm2Id, const std::string& targetLineId,
                       const std::string& targetVertexId, HalfPlane side, const std::string& id) {
    const Point& vertex = sk.point_at(vertexId);
    const Point& arm1 = sk.point_at(arm1Id);
    const Point& arm2 = sk.point_at(arm2Id);
    const Line& target = sk.line_at(targetLineId);
    const Point& tv = sk.point_at(targetVertexId);
    if (equals(vertex, arm1) || equals(vertex, arm2))
        fail(Errc::degenerate_angle, "angle arm coincides with its vertex");
    if (!incidence(tv, target)) fail(Errc::vertex_not_on_line, "target vertex not on target line");
    const std::string via = "copy_angle";

    // Triangle transfer: lay off |vertex arm1| on the target line, then find
    // the apex from the two remaining side lengths.
    std::string d = transfer_distance(sk, vertexId, arm1Id, targetLineId, targetVertexId,
                                      Direction::forward);
    if (equals(arm1, arm2)) {
        // Zero-width angle: the copied arm is the target ray itself.
        return sk.line(targetVertexId, d, via, id);
    }
    std::string cv = compass_to(sk, targetVertexId, vertexId, arm2Id);
    std::string cd = compass_to(sk, d, arm1Id, arm2Id);
    auto cands = sk.intersection_candidates(cv, cd);
    if (cands.empty())
        fail(Errc::no_such_intersection, "angle transfer circles do not meet");
    int branch = 0;
    if (cands.size() == 2) {
        int wanted = side == HalfPlane::left ? 1 : -1;
        Point dir = target.direction();
        branch = cross(dir, diff(cands[0], tv)).sign() == wanted ? 0 : 1;
    }
    std::string apex = sk.intersection(cv, cd, branch, via);
    return sk.line(targetVertexId, apex, via, id);
}

// --- value-level wrappers -------------------------------------------------

MidpointResult midpoint_and_bisector(const Point& p, const Point& q) {
    Sketch sk;
    std::string pId = sk.seed(p);
    std::string qId = sk.seed(q);
    auto ids = midpoint_and_bisector(sk, pId, qId);
    return {sk.point_at(ids.midpoint), sk.line_at(ids.bisector), sk.trace()};
}

LineResult perpendicular_from_point(const Line& l, const Point& p) {
    Sketch sk;
    std::string a = sk.seed(l.p());
    std::string b = sk.seed(l.q());
    std::string lid = sk.line(a, b);
    std::string pid;
    if (equals(p, l.p()))
        pid = a;
    else if (equals(p, l.q()))
        pid = b;
    else
        pid = sk.seed(p);
    std::string result = perpendicular_from_point(sk, lid, pid);
    return {sk.line_at(result), sk.trace()};
}

LineResult copy_angle(const Angle& src, const Line& targetLine, const Point& targetVertex,
                      HalfPlane side) {
    Sketch sk;
    std::string v = sk.seed(src.vertex);
    std::string a1 = equals(src.arm1, src.vertex) ? v : sk.seed(src.arm1);
    std::string a2;
    if (equals(src.arm2, src.vertex))
        a2 = v;
    else if (equals(src.arm2, src.arm1))
        a2 = a1;
    else
        a2 = sk.seed(src.arm2);
    std::string tp = sk.seed(targetLine.p());
    std::string tq = sk.seed(targetLine.q());
    std::string tl = sk.line(tp, tq);
    std::string tv;
    if (equals(targetVertex, targetLine.p()))
        tv = tp;
    else if (equals(targetVertex, targetLine.q()))
        tv = tq;
    else
        tv = sk.seed(targetVertex);
    std::string result = copy_angle(sk, v, a1, a2, tl, tv, side);
    return {sk.line_at(result), sk.trace()};
}

PointResult transfer_distance(const Point& p, const Point& q, const Line& along,
                              const Point& from, Direction side) {
    Sketch sk;
    std::string pid = sk.seed(p);
    std::string qid = equals(q, p) ? pid : sk.seed(q);
    std::string a = sk.seed(along.p());
    std::string b = sk.seed(along.q());
    std::string lid = sk.line(a, b);
    std::string fid;
    if (equals(from, along.p()))
        fid = a;
    else if (equals(from, along.q()))
        fid = b;
    else
        fid = sk.seed(from);
    std::string result = transfer_distance(sk, pid, qid, lid, fid, side);
    return {sk.point_at(result), sk.trace()};
}

}  // namespace kha

#include "kha/geometry.hpp"

#include <algorithm>

namespace kha {

bool equals(const Point& a, const Point& b) { return equals(a.x, b.x) && equals(a.y, b.y); }

Constructible dist_sq(const Point& p, const Point& q) {
    Constructible dx = p.x - q.x;
    Constructible dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Line::Line(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
    if (equals(p_, q_)) fail(Errc::degenerate_line, "line through coincident points");
}

Line::Coeffs Line::coeffs() const {
    Constructible a = p_.y - q_.y;
    Constructible b = q_.x - p_.x;
    Constructible c = Constructible() - (a * p_.x + b * p_.y);
    return {std::move(a), std::move(b), std::move(c)};
}

Point Line::direction() const { return {q_.x - p_.x, q_.y - p_.y}; }

Circle::Circle(Point center, Point through) : center_(std::move(center)), through_(std::move(through)) {
    if (equals(center_, through_)) fail(Errc::degenerate_circle, "circle of zero radius");
}

Constructible Circle::radius_sq() const { return dist_sq(center_, through_); }

bool incidence(const Point& p, const Line& l) {
    auto [a, b, c] = l.coeffs();
    return (a * p.x + b * p.y + c).is_zero();
}

bool incidence(const Point& p, const Circle& c) {
    return equals(dist_sq(p, c.center()), c.radius_sq());
}

std::optional<Point> intersect_line_line(const Line& l, const Line& m) {
    auto [a1, b1, c1] = l.coeffs();
    auto [a2, b2, c2] = m.coeffs();
    Constructible den = a1 * b2 - a2 * b1;
    if (den.is_zero()) {
        if (incidence(m.p(), l)) fail(Errc::coincident_objects, "lines coincide");
        return std::nullopt;
    }
    Constructible x = (b1 * c2 - b2 * c1) / den;
    Constructible y = (c1 * a2 - c2 * a1) / den;
    return Point{std::move(x), std::move(y)};
}

std::vector<Point> intersect_line_circle(const Line& l, const Circle& c) {
    Point d = l.direction();
    Constructible fx = l.p().x - c.center().x;
    Constructible fy = l.p().y - c.center().y;
    Constructible a = d.x * d.x + d.y * d.y;       // > 0
    Constructible b = fx * d.x + fy * d.y;
    Constructible k = fx * fx + fy * fy - c.radius_sq();
    Constructible disc = b * b - a * k;
    int s = disc.sign();
    if (s < 0) return {};
    auto at = [&](const Constructible& t) {
        return Point{l.p().x + t * d.x, l.p().y + t * d.y};
    };
    if (s == 0) return {at((Constructible() - b) / a)};
    Constructible root = sqrt(disc);
    Constructible t1 = (Constructible() - b - root) / a;
    Constructible t2 = (Constructible() - b + root) / a;
    return {at(t1), at(t2)};
}

std::vector<Point> intersect_circle_circle(const Circle& c1, const Circle& c2) {
    const Point& a = c1.center();
    const Point& b = c2.center();
    if (equals(a, b)) {
        if (equals(c1.radius_sq(), c2.radius_sq()))
            fail(Errc::coincident_objects, "circles coincide");
        return {};
    }
    Constructible ex = b.x - a.x;
    Constructible ey = b.y - a.y;
    Constructible d2 = ex * ex + ey * ey;  // > 0
    Constructible r1 = c1.radius_sq();
    Constructible r2 = c2.radius_sq();
    Constructible alpha = (d2 + r1 - r2) / (Constructible(2) * d2);
    Point foot{a.x + alpha * ex, a.y + alpha * ey};
    Constructible h2 = r1 - alpha * alpha * d2;  // squared offset along the normal
    int s = h2.sign();
    if (s < 0) return {};
    if (s == 0) return {foot};
    Constructible w = sqrt(h2 / d2);
    // (-ey, ex) is the left normal of a -> b, so the first point is left.
    Point left{foot.x - w * ey, foot.y + w * ex};
    Point right{foot.x + w * ey, foot.y - w * ex};
    return {std::move(left), std::move(right)};
}

const char* role_name(Role r) {
    switch (r) {
        case Role::lattice: return "lattice";
        case Role::figure: return "figure";
        case Role::auxiliary: return "auxiliary";
    }
    return "auxiliary";
}

std::optional<Role> role_from_name(std::string_view name) {
    if (name == "lattice") return Role::lattice;
    if (name == "figure") return Role::figure;
    if (name == "auxiliary") return Role::auxiliary;
    return std::nullopt;
}

ObjKind kind_of(const Geometry& g) {
    if (std::holds_alternative<Point>(g)) return ObjKind::point;
    if (std::holds_alternative<Line>(g)) return ObjKind::line;
    return ObjKind::circle;
}

const char* kind_name(ObjKind k) {
    switch (k) {
        case ObjKind::point: return "point";
        case ObjKind::line: return "line";
        case ObjKind::circle: return "circle";
    }
    return "point";
}

void Scene::add(std::string id, Geometry geom, Role role) {
    if (has(id)) fail(Errc::duplicate_id, "scene id '" + id + "' already used");
    objects_.push_back({std::move(id), role, std::move(geom)});
}

void Scene::set_role(const std::string& id, Role role) {
    for (auto& o : objects_) {
        if (o.id == id) {
            o.role = role;
            return;
        }
    }
    fail(Errc::unknown_id, "no scene object '" + id + "'");
}

bool Scene::has(const std::string& id) const {
    return std::any_of(objects_.begin(), objects_.end(),
                       [&](const SceneObject& o) { return o.id == id; });
}

const SceneObject& Scene::at(const std::string& id) const {
    for (const auto& o : objects_) {
        if (o.id == id) return o;
    }
    fail(Errc::unknown_id, "no scene object '" + id + "'");
}

}  // namespace kha

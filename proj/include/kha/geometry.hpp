#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "kha/constructible.hpp"

namespace kha {

// Exact planar objects over constructible coordinates, with the three
// primitive intersection operations of compass-and-straightedge work. Every
// point an intersection returns is exactly incident to both arguments; there
// are no tolerances anywhere in this module.

struct Point {
    Constructible x, y;
};

bool equals(const Point& a, const Point& b);

// (p.x - q.x)^2 + (p.y - q.y)^2, exact.
Constructible dist_sq(const Point& p, const Point& q);

// A line is stored as its two defining points, the way a straightedge user
// drew it; implicit coefficients a*x + b*y + c = 0 are derived on demand.
class Line {
public:
    Line(Point p, Point q);  // throws DegenerateLine when p == q

    const Point& p() const { return p_; }
    const Point& q() const { return q_; }

    struct Coeffs {
        Constructible a, b, c;
    };
    Coeffs coeffs() const;

    // q - p, the direction the defining points induce.
    Point direction() const;

private:
    Point p_, q_;
};

// A circle is a center plus a point it passes through — the two points a
// physical compass is set with. The scalar radius appears only as radius_sq.
class Circle {
public:
    Circle(Point center, Point through);  // throws DegenerateCircle when equal

    const Point& center() const { return center_; }
    const Point& through() const { return through_; }
    Constructible radius_sq() const;

private:
    Point center_, through_;
};

bool incidence(const Point& p, const Line& l);
bool incidence(const Point& p, const Circle& c);

// Point of intersection, nullopt for parallel distinct lines. Throws
// CoincidentObjects when both arguments describe the same line.
std::optional<Point> intersect_line_line(const Line& l, const Line& m);

// 0, 1 (tangency) or 2 points, ordered by the signed parameter t along the
// direction l.p -> l.q.
std::vector<Point> intersect_line_circle(const Line& l, const Circle& c);

// 0, 1 (tangency) or 2 points; the first point is the one strictly to the
// left of the directed line c1.center -> c2.center. Throws CoincidentObjects
// for identical circles.
std::vector<Point> intersect_circle_circle(const Circle& c1, const Circle& c2);

// --- scene ------------------------------------------------------------

enum class Role { lattice, figure, auxiliary };

const char* role_name(Role r);
std::optional<Role> role_from_name(std::string_view name);

using Geometry = std::variant<Point, Line, Circle>;

enum class ObjKind { point, line, circle };

ObjKind kind_of(const Geometry& g);
const char* kind_name(ObjKind k);

struct SceneObject {
    std::string id;
    Role role;
    Geometry geom;
};

// Ordered collection of named objects. Insertion order is preserved; ids are
// unique. Single writer while building, freely readable afterwards.
class Scene {
public:
    void add(std::string id, Geometry geom, Role role);  // throws DuplicateId
    void set_role(const std::string& id, Role role);     // throws UnknownId

    bool has(const std::string& id) const;
    const SceneObject& at(const std::string& id) const;  // throws UnknownId

    const std::vector<SceneObject>& objects() const { return objects_; }
    bool empty() const { return objects_.empty(); }
    size_t size() const { return objects_.size(); }

private:
    std::vector<SceneObject> objects_;
};

}  // namespace kha

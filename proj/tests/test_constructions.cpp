#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kha/constructions.hpp"
#include "kha/trace.hpp"

using namespace kha;

namespace {

Point pt(long long x, long long y) { return {Constructible(x), Constructible(y)}; }

Point pt(const Rational& x, const Rational& y) { return {Constructible(x), Constructible(y)}; }

Constructible dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
Constructible cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

// cos of the angle arm1-vertex-arm2, exact (grows the tower by the norms).
Constructible cos_of(const Angle& a) {
    Point u{a.arm1.x - a.vertex.x, a.arm1.y - a.vertex.y};
    Point v{a.arm2.x - a.vertex.x, a.arm2.y - a.vertex.y};
    return dot(u, v) / (sqrt(dot(u, u)) * sqrt(dot(v, v)));
}

}  // namespace

TEST_CASE("midpoint and bisector") {
    auto r = midpoint_and_bisector(pt(0, 0), pt(2, 0));
    CHECK(equals(r.midpoint, pt(1, 0)));
    Point dir = r.bisector.direction();
    CHECK(dir.x.is_zero());  // vertical line x=1
    CHECK(incidence(pt(1, 5), r.bisector));
    validate_trace(r.trace);

    CHECK_THROWS_AS(midpoint_and_bisector(pt(1, 1), pt(1, 1)), Error);

    auto r2 = midpoint_and_bisector(pt(1, 1), pt(3, 5));
    CHECK(equals(r2.midpoint, pt(2, 3)));
    CHECK(dot(r2.bisector.direction(), Point{Constructible(2), Constructible(4)}).is_zero());
    CHECK(dist_sq(r2.midpoint, pt(1, 1)) == dist_sq(r2.midpoint, pt(3, 5)));
    CHECK(incidence(r2.midpoint, Line(pt(1, 1), pt(3, 5))));
}

TEST_CASE("perpendicular from a point off the line") {
    Line xAxis(pt(0, 0), pt(1, 0));
    auto r = perpendicular_from_point(xAxis, pt(0, 1));
    CHECK(incidence(pt(0, 1), r.line));
    CHECK(dot(r.line.direction(), xAxis.direction()).is_zero());
    CHECK(incidence(pt(0, 0), r.line));  // the y-axis
    validate_trace(r.trace);

    // foot of the perpendicular from (1,2) onto the line through (0,0),(3,1)
    Line slanted(pt(0, 0), pt(3, 1));
    auto rp = perpendicular_from_point(slanted, pt(1, 2));
    CHECK(incidence(pt(1, 2), rp.line));
    CHECK(dot(rp.line.direction(), slanted.direction()).is_zero());
    auto foot = intersect_line_line(rp.line, slanted);
    REQUIRE(foot.has_value());
    CHECK(equals(*foot, pt(Rational(3, 2), Rational(1, 2))));
}

TEST_CASE("perpendicular erected at a point on the line") {
    Line xAxis(pt(0, 0), pt(1, 0));
    auto r = perpendicular_from_point(xAxis, pt(2, 0));
    CHECK(incidence(pt(2, 0), r.line));
    CHECK(dot(r.line.direction(), xAxis.direction()).is_zero());
    validate_trace(r.trace);
}

TEST_CASE("perpendicular twice is parallel to the original") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> c(-5, 5);
    int done = 0;
    while (done < 30) {
        Point a = pt(c(rng), c(rng)), b = pt(c(rng), c(rng)), p = pt(c(rng), c(rng));
        if (equals(a, b)) continue;
        Line l(a, b);
        auto first = perpendicular_from_point(l, p);
        auto second = perpendicular_from_point(first.line, p);
        CHECK(cross(second.line.direction(), l.direction()).is_zero());
        ++done;
    }
}

TEST_CASE("transfer distance") {
    Line xAxis(pt(0, 0), pt(1, 0));
    auto fwd = transfer_distance(pt(0, 0), pt(1, 0), xAxis, pt(0, 0), Direction::forward);
    CHECK(equals(fwd.point, pt(1, 0)));
    validate_trace(fwd.trace);

    auto bwd = transfer_distance(pt(0, 0), pt(1, 0), xAxis, pt(0, 0), Direction::backward);
    CHECK(equals(bwd.point, pt(-1, 0)));

    auto diag = transfer_distance(pt(0, 0), pt(1, 1), xAxis, pt(0, 0), Direction::forward);
    CHECK(equals(diag.point.x, sqrt(Constructible(2))));
    CHECK(diag.point.y.is_zero());
    CHECK(diag.point.x.to_double() == doctest::Approx(1.4142135623730951));

    // remote segment, carried by the full transfer construction
    auto remote = transfer_distance(pt(5, 7), pt(5, 4), xAxis, pt(2, 0), Direction::forward);
    CHECK(equals(remote.point, pt(5, 0)));
    CHECK(dist_sq(remote.point, pt(2, 0)) == Constructible(9));
    validate_trace(remote.trace);

    CHECK_THROWS_AS(transfer_distance(pt(0, 0), pt(0, 0), xAxis, pt(0, 0), Direction::forward),
                    Error);
    CHECK_THROWS_AS(transfer_distance(pt(0, 0), pt(1, 0), xAxis, pt(0, 1), Direction::forward),
                    Error);
}

TEST_CASE("copy_angle: right angle onto the x-axis") {
    Angle right{pt(0, 0), pt(1, 0), pt(0, 1)};
    Line xAxis(pt(0, 0), pt(1, 0));
    auto r = copy_angle(right, xAxis, pt(5, 0), HalfPlane::left);
    CHECK(incidence(pt(5, 0), r.line));
    CHECK(dot(r.line.direction(), xAxis.direction()).is_zero());  // cos = 0 exactly
    validate_trace(r.trace);
    // left opening: the non-vertex defining point sits above the axis
    Point other = equals(r.line.p(), pt(5, 0)) ? r.line.q() : r.line.p();
    CHECK(other.y.sign() > 0);

    auto rr = copy_angle(right, xAxis, pt(5, 0), HalfPlane::right);
    Point otherR = equals(rr.line.p(), pt(5, 0)) ? rr.line.q() : rr.line.p();
    CHECK(otherR.y.sign() < 0);
}

TEST_CASE("copy_angle: zero-width angle is collinear with the target") {
    Angle zero{pt(0, 0), pt(2, 0), pt(2, 0)};  // both arms through the same point
    Line target(pt(0, 0), pt(0, 1));
    auto r = copy_angle(zero, target, pt(0, 0), HalfPlane::left);
    CHECK(cross(r.line.direction(), target.direction()).is_zero());
    validate_trace(r.trace);
}

TEST_CASE("copy_angle: 60 degrees from the equilateral triangle") {
    Point apex{Constructible(Rational(1, 2)), sqrt(Constructible(3)) / Constructible(2)};
    Angle sixty{pt(0, 0), pt(1, 0), apex};
    Line xAxis(pt(0, 0), pt(1, 0));
    auto r = copy_angle(sixty, xAxis, pt(0, 0), HalfPlane::left);
    Angle copied{pt(0, 0), pt(1, 0), equals(r.line.p(), pt(0, 0)) ? r.line.q() : r.line.p()};
    CHECK(equals(cos_of(copied), Constructible(Rational(1, 2))));
    validate_trace(r.trace);
}

TEST_CASE("copy_angle errors") {
    Line xAxis(pt(0, 0), pt(1, 0));
    CHECK_THROWS_AS(copy_angle(Angle{pt(0, 0), pt(0, 0), pt(1, 1)}, xAxis, pt(0, 0),
                               HalfPlane::left),
                    Error);
    CHECK_THROWS_AS(copy_angle(Angle{pt(0, 0), pt(1, 0), pt(0, 1)}, xAxis, pt(3, 1),
                               HalfPlane::left),
                    Error);
}

TEST_CASE("copy_angle exactness on random angles") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    int done = 0;
    while (done < 40) {
        auto coord = [&]() { return Rational(num(rng), den(rng)); };
        Point v = pt(coord(), coord());
        Point a1 = pt(coord(), coord());
        Point a2 = pt(coord(), coord());
        if (equals(v, a1) || equals(v, a2)) continue;
        Point tp = pt(coord(), coord());
        Point tq = pt(coord(), coord());
        if (equals(tp, tq)) continue;
        Line target(tp, tq);
        Angle src{v, a1, a2};
        HalfPlane side = done % 2 == 0 ? HalfPlane::left : HalfPlane::right;
        auto r = copy_angle(src, target, tp, side);
        Point arm = equals(r.line.p(), tp) ? r.line.q() : r.line.p();
        // the new arm opens against the forward direction laid on the target
        auto fwd = transfer_distance(v, a1, target, tp, Direction::forward);
        Angle copied{tp, fwd.point, arm};
        CHECK(equals(cos_of(copied), cos_of(src)));
        validate_trace(r.trace);
        ++done;
    }
}

TEST_CASE("macro traces replay to the same objects") {
    auto r = midpoint_and_bisector(pt(1, 1), pt(3, 5));
    auto objs = replay_trace(r.trace);
    bool foundMidpoint = false;
    for (const auto& [id, g] : objs) {
        (void)id;
        if (const Point* p = std::get_if<Point>(&g))
            if (equals(*p, r.midpoint)) foundMidpoint = true;
    }
    CHECK(foundMidpoint);

    // the declared result of each macro is the object its final step creates
    auto perp = perpendicular_from_point(Line(pt(0, 0), pt(3, 1)), pt(1, 2));
    auto perpObjs = replay_trace(perp.trace);
    const Line& replayedPerp = std::get<Line>(perpObjs.at(perp.trace.steps.back().id));
    CHECK(equals(replayedPerp.p(), perp.line.p()));
    CHECK(equals(replayedPerp.q(), perp.line.q()));

    Angle sixty{pt(0, 0), pt(1, 0),
                Point{Constructible(Rational(1, 2)), sqrt(Constructible(3)) / Constructible(2)}};
    auto copied = copy_angle(sixty, Line(pt(0, 0), pt(1, 0)), pt(0, 0), HalfPlane::left);
    auto copyObjs = replay_trace(copied.trace);
    const Line& replayedArm = std::get<Line>(copyObjs.at(copied.trace.steps.back().id));
    CHECK(equals(replayedArm.p(), copied.line.p()));
    CHECK(equals(replayedArm.q(), copied.line.q()));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "kha/dsl.hpp"
#include "kha/grid.hpp"
#include "kha/scene_io.hpp"
#include "kha/svg.hpp"

using namespace kha;

namespace {

Point pt(long long x, long long y) { return {Constructible(x), Constructible(y)}; }

Scene vesica_scene() {
    auto r = dsl::parse(
        "point A = (0,0)\npoint B = (1,0)\ncircle c1 = circle(A,B)\ncircle c2 = circle(B,A)\n"
        "point P,Q = intersect(c1,c2)");
    REQUIRE(r.ok());
    auto e = dsl::evaluate(r.program);
    REQUIRE(e.ok());
    return e.scene;
}

bool scenes_equal(const Scene& a, const Scene& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        const SceneObject& x = a.objects()[i];
        const SceneObject& y = b.objects()[i];
        if (x.id != y.id || x.role != y.role) return false;
        if (kind_of(x.geom) != kind_of(y.geom)) return false;
        if (const Point* p = std::get_if<Point>(&x.geom)) {
            if (!equals(*p, std::get<Point>(y.geom))) return false;
        } else if (const Line* l = std::get_if<Line>(&x.geom)) {
            const Line& m = std::get<Line>(y.geom);
            if (!equals(l->p(), m.p()) || !equals(l->q(), m.q())) return false;
        } else {
            const Circle& c = std::get<Circle>(x.geom);
            const Circle& d = std::get<Circle>(y.geom);
            if (!equals(c.center(), d.center()) || !equals(c.through(), d.through())) return false;
        }
    }
    return true;
}

// Random scene with nested-radical coordinates up to tower depth 3.
Scene random_scene(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    auto coord = [&](int depth) {
        Constructible v{Rational(num(rng), den(rng))};
        for (int i = 0; i < depth; ++i) {
            Constructible w{Rational(num(rng), den(rng))};
            v = sqrt(v * v + w * w + Constructible(1));
        }
        return v;
    };
    std::uniform_int_distribution<int> depth(0, 3);
    Scene s;
    Point a{coord(depth(rng)), coord(depth(rng))};
    Point b{a.x + Constructible(1) + [&]{ Constructible t = coord(depth(rng)); return t * t; }(), a.y};
    Point c{a.x, a.y + sqrt(Constructible(2) + [&]{ Constructible t = coord(depth(rng)); return t * t; }())};
    s.add("A", a, Role::auxiliary);
    s.add("l", Line(a, b), Role::lattice);
    s.add("k", Circle(a, c), Role::figure);
    return s;
}

}  // namespace

TEST_CASE("document round trip is lossless for the vesica scene") {
    Scene s = vesica_scene();
    std::string doc = scene_to_document(s);
    Scene back = document_to_scene(doc);
    CHECK(scenes_equal(s, back));
    const Point& p = std::get<Point>(back.at("P").geom);
    CHECK(equals(p.x, Constructible(Rational(1, 2))));
    CHECK(equals(p.y, sqrt(Constructible(3)) / Constructible(2)));
    // serialization is deterministic
    CHECK(scene_to_document(back) == doc);
}

TEST_CASE("document round trip on random nested-radical scenes") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 30; ++i) {
        Scene s = random_scene(rng);
        Scene back = document_to_scene(scene_to_document(s));
        CHECK(scenes_equal(s, back));
    }
}

TEST_CASE("document approx values stay within 1e-14 relative of the exact ones") {
    std::mt19937_64 rng(1414);
    for (int i = 0; i < 10; ++i) {
        Scene s = random_scene(rng);
        auto doc = nlohmann::json::parse(scene_to_document(s));
        for (const auto& obj : doc["objects"]) {
            if (obj["kind"] != "point") continue;
            for (const char* key : {"x", "y"}) {
                double approx = obj["approx"][key].get<double>();
                double exact =
                    parse_radical(obj["exact"][key].get<std::string>()).to_double();
                CHECK(std::fabs(approx - exact) <= 1e-14 * (1 + std::fabs(exact)));
            }
        }
    }
}

TEST_CASE("rational-only scenes round trip byte-identically") {
    Scene s;
    s.add("A", pt(0, 0), Role::auxiliary);
    s.add("l", Line(pt(0, 0), pt(1, 0)), Role::lattice);
    s.add("k", Circle(pt(0, 0), pt(3, 4)), Role::figure);
    std::string doc = scene_to_document(s);
    CHECK(scene_to_document(document_to_scene(doc)) == doc);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(document_to_scene("not json"), Error);
    CHECK_THROWS_AS(document_to_scene("{}"), Error);
    CHECK_THROWS_AS(document_to_scene(R"({"version":2,"objects":[]})"), Error);
    CHECK_THROWS_AS(document_to_scene(R"({"version":1})"), Error);
    CHECK_THROWS_AS(
        document_to_scene(
            R"({"version":1,"objects":[{"id":"A","kind":"point","role":"auxiliary","exact":{"x":"1"}}]})"),
        Error);
    CHECK_THROWS_AS(
        document_to_scene(
            R"({"version":1,"objects":[{"id":"A","kind":"blob","role":"auxiliary","exact":{}}]})"),
        Error);

    // a negative radicand in an exact string is unparseable
    try {
        document_to_scene(
            R"x({"version":1,"objects":[{"id":"A","kind":"point","role":"auxiliary",)x"
            R"x("exact":{"x":"sqrt(-2)","y":"0"}}]})x");
        FAIL("negative radicand accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unparseable_radical);
    }

    // stored r2 must agree with the center/through pair
    CHECK_THROWS_AS(
        document_to_scene(
            R"({"version":1,"objects":[{"id":"k","kind":"circle","role":"figure",)"
            R"("exact":{"cx":"0","cy":"0","tx":"1","ty":"0","r2":"2"}}]})"),
        Error);
}

TEST_CASE("svg of the minimal grid has two lines and one circle") {
    GridSpec spec = GridSpec::create(1, 1, Constructible(1), Constructible(1));
    auto g = generate_grid(pt(0, 0), pt(1, 0), spec);
    std::string svg = scene_to_svg(g.scene);
    size_t lines = 0, circles = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++circles;
        ++pos;
    }
    CHECK(lines == 2);
    CHECK(circles == 1);
    CHECK(svg.find("#CC0000") != std::string::npos);
    CHECK(svg.find("#000000") != std::string::npos);
    CHECK(scene_to_svg(g.scene) == svg);  // byte determinism
}

TEST_CASE("svg circle centers parse back to the exact coordinates") {
    GridSpec spec = GridSpec::create(3, 3, Constructible(1), Constructible(1));
    auto g = generate_grid(pt(0, 0), pt(1, 0), spec);
    std::string svg = scene_to_svg(g.scene);

    std::vector<std::pair<double, double>> centers;
    size_t pos = 0;
    while ((pos = svg.find("<circle cx=\"", pos)) != std::string::npos) {
        pos += 12;
        size_t q1 = svg.find('"', pos);
        double cx = std::strtod(svg.substr(pos, q1 - pos).c_str(), nullptr);
        size_t cyPos = svg.find("cy=\"", q1) + 4;
        size_t q2 = svg.find('"', cyPos);
        double cy = std::strtod(svg.substr(cyPos, q2 - cyPos).c_str(), nullptr);
        centers.emplace_back(cx, cy);
    }
    REQUIRE(centers.size() == 9);
    int idx = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(std::fabs(centers[idx].first - j) < 1e-12);
            CHECK(std::fabs(centers[idx].second - i) < 1e-12);
            ++idx;
        }
    }
}

TEST_CASE("empty scene cannot render") {
    Scene s;
    CHECK_THROWS_AS(scene_to_svg(s), Error);
}

TEST_CASE("style overrides show up in the output") {
    Scene s;
    s.add("k", Circle(pt(0, 0), pt(1, 0)), Role::figure);
    RenderStyle style;
    style.figure_color = "#123456";
    style.background = "#FFFFFF";
    style.stroke_width = 0.25;
    std::string svg = scene_to_svg(s, style);
    CHECK(svg.find("#123456") != std::string::npos);
    CHECK(svg.find("<rect") != std::string::npos);
    CHECK(svg.find("stroke-width=\"0.25\"") != std::string::npos);
}

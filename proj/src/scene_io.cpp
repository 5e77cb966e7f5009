#include "kha/scene_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace kha {

namespace {

using Json = nlohmann::ordered_json;

// 15 significant digits, parsed back to double so the JSON number is the
// shortest representation of exactly that value.
double approx15(const Constructible& v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v.to_double());
    return std::strtod(buf, nullptr);
}

Json object_to_json(const SceneObject& o) {
    Json j;
    j["id"] = o.id;
    j["kind"] = kind_name(kind_of(o.geom));
    j["role"] = role_name(o.role);
    Json exact, approx;
    if (const Point* p = std::get_if<Point>(&o.geom)) {
        exact["x"] = p->x.to_radical_string();
        exact["y"] = p->y.to_radical_string();
        approx["x"] = approx15(p->x);
        approx["y"] = approx15(p->y);
    } else if (const Line* l = std::get_if<Line>(&o.geom)) {
        exact["px"] = l->p().x.to_radical_string();
        exact["py"] = l->p().y.to_radical_string();
        exact["qx"] = l->q().x.to_radical_string();
        exact["qy"] = l->q().y.to_radical_string();
        approx["px"] = approx15(l->p().x);
        approx["py"] = approx15(l->p().y);
        approx["qx"] = approx15(l->q().x);
        approx["qy"] = approx15(l->q().y);
    } else {
        const Circle& c = std::get<Circle>(o.geom);
        exact["cx"] = c.center().x.to_radical_string();
        exact["cy"] = c.center().y.to_radical_string();
        exact["tx"] = c.through().x.to_radical_string();
        exact["ty"] = c.through().y.to_radical_string();
        exact["r2"] = c.radius_sq().to_radical_string();
        approx["cx"] = approx15(c.center().x);
        approx["cy"] = approx15(c.center().y);
        approx["r"] = approx15(sqrt(c.radius_sq()));
    }
    j["exact"] = std::move(exact);
    j["approx"] = std::move(approx);
    return j;
}

Constructible exact_field(const Json& exact, const char* key) {
    if (!exact.contains(key) || !exact[key].is_string())
        fail(Errc::malformed_document, std::string("missing exact field '") + key + "'");
    return parse_radical(exact[key].get<std::string>());
}

}  // namespace

std::string scene_to_document(const Scene& scene) {
    Json doc;
    doc["version"] = 1;
    Json objects = Json::array();
    for (const auto& o : scene.objects()) objects.push_back(object_to_json(o));
    doc["objects"] = std::move(objects);
    return doc.dump(2) + "\n";
}

Scene document_to_scene(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(Errc::malformed_document, "not valid JSON");
    if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != 1)
        fail(Errc::malformed_document, "missing or unsupported document version");
    if (!doc.contains("objects") || !doc["objects"].is_array())
        fail(Errc::malformed_document, "missing objects array");

    Scene scene;
    for (const auto& j : doc["objects"]) {
        if (!j.is_object() || !j.contains("id") || !j["id"].is_string() || !j.contains("kind") ||
            !j["kind"].is_string() || !j.contains("role") || !j["role"].is_string() ||
            !j.contains("exact"))
            fail(Errc::malformed_document, "object entry missing id/kind/role/exact");
        std::string id = j["id"].get<std::string>();
        auto role = role_from_name(j["role"].get<std::string>());
        if (!role) fail(Errc::malformed_document, "unknown role on object '" + id + "'");
        const Json& exact = j["exact"];
        std::string kind = j["kind"].get<std::string>();
        try {
            if (kind == "point") {
                Point p{exact_field(exact, "x"), exact_field(exact, "y")};
                scene.add(id, p, *role);
            } else if (kind == "line") {
                Point p{exact_field(exact, "px"), exact_field(exact, "py")};
                Point q{exact_field(exact, "qx"), exact_field(exact, "qy")};
                scene.add(id, Line(p, q), *role);
            } else if (kind == "circle") {
                Point c{exact_field(exact, "cx"), exact_field(exact, "cy")};
                Point t{exact_field(exact, "tx"), exact_field(exact, "ty")};
                Circle circle(c, t);
                if (!equals(circle.radius_sq(), exact_field(exact, "r2")))
                    fail(Errc::malformed_document,
                         "stored r2 disagrees with center/through on '" + id + "'");
                scene.add(id, std::move(circle), *role);
            } else {
                fail(Errc::malformed_document, "unknown kind '" + kind + "' on object '" + id + "'");
            }
        } catch (const Error& e) {
            if (e.code() == Errc::unparseable_radical || e.code() == Errc::malformed_document)
                throw;
            fail(Errc::malformed_document, "object '" + id + "': " + e.what());
        }
    }
    return scene;
}

}  // namespace kha

#include "kha/ancient_ratios.hpp"

#include <array>

#include "kha/constructible.hpp"
#include "kha/geometry.hpp"

namespace kha {

const Rational& pi_reference() {
    static const Rational ref(
        BigInt("314159265358979323846264338327950288419716939937510"), pow10(50));
    return ref;
}

namespace {

double error_against_pi(const Rational& value) {
    Rational err = value - pi_reference();
    return abs(err).to_double();
}

std::string two_digits(const Rational& value) { return Constructible(value).approx(2); }

}  // namespace

PiApproximation hemaka_pi() {
    PiApproximation a;
    a.name = "hemaka";
    a.value = Rational(66, 21);  // canonical form is 22/7
    a.derivation = {
        "ratio read off the Hemaka game-disk decoration: 66/21",
        "gcd(66, 21) = 3, so 66/21 reduces to " + a.value.str(),
        "two-digit decimal: " + two_digits(a.value),
    };
    a.decimal_2 = two_digits(a.value);
    a.error_vs_pi = error_against_pi(a.value);
    return a;
}

PiApproximation rhind_octagon_pi() {
    // Square of side 9 with the four corner triangles of legs 3 removed.
    const std::array<std::pair<int, int>, 8> vertices = {
        {{3, 0}, {6, 0}, {9, 3}, {9, 6}, {6, 9}, {3, 9}, {0, 6}, {0, 3}}};
    std::vector<Point> octagon;
    octagon.reserve(vertices.size());
    for (auto [vx, vy] : vertices) octagon.push_back({Constructible(vx), Constructible(vy)});

    // Exact shoelace area over the constructible vertices.
    Constructible twiceArea;
    for (size_t i = 0; i < octagon.size(); ++i) {
        const Point& p = octagon[i];
        const Point& q = octagon[(i + 1) % octagon.size()];
        twiceArea += p.x * q.y - q.x * p.y;
    }
    Constructible area = abs(twiceArea) / Constructible(2);
    Rational areaRat = *area.as_rational();

    PiApproximation a;
    a.name = "rhind";
    a.value = Rational(4 * 64, 81);  // pi * (9/2)^2 = 64  =>  pi = 256/81
    std::string vertexList;
    for (auto [vx, vy] : vertices)
        vertexList += "(" + std::to_string(vx) + "," + std::to_string(vy) + ")";
    a.derivation = {
        "square of side 9 has area 81",
        "cutting the four corner triangles of legs 3 leaves the octagon " + vertexList,
        "shoelace area of the octagon = " + areaRat.str(),
        "the octagon area " + areaRat.str() + " is taken as 64 = 8^2",
        "equating the circle of diameter 9 to that area: pi * (9/2)^2 = 64",
        "pi = 64 * 4 / 81 = " + a.value.str(),
        "two-digit decimal: " + two_digits(a.value),
    };
    a.decimal_2 = two_digits(a.value);
    a.error_vs_pi = error_against_pi(a.value);
    return a;
}

}  // namespace kha

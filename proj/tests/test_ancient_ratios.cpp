#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kha/ancient_ratios.hpp"
#include "oracles.hpp"

using namespace kha;

TEST_CASE("hemaka ratio reduces to 22/7 and prints 3.14") {
    auto a = hemaka_pi();
    CHECK(a.value == Rational(22, 7));
    CHECK(a.value.numerator() == 22);
    CHECK(a.value.denominator() == 7);
    CHECK(a.decimal_2 == "3.14");
    bool mentionsOrigin = false;
    for (const auto& s : a.derivation) mentionsOrigin |= s.find("66/21") != std::string::npos;
    CHECK(mentionsOrigin);
    CHECK(Rational(66, 21) == a.value);  // gcd 3
}

TEST_CASE("rhind octagon method yields 256/81 with a recomputed area") {
    auto a = rhind_octagon_pi();
    CHECK(a.value == Rational(256, 81));
    CHECK(a.decimal_2 == "3.16");
    bool area63 = false;
    for (const auto& s : a.derivation)
        area63 |= s.find("shoelace area of the octagon = 63") != std::string::npos;
    CHECK(area63);

    // independent float shoelace over the corner-cut square
    double xs[8] = {3, 6, 9, 9, 6, 3, 0, 0};
    double ys[8] = {0, 0, 3, 6, 9, 9, 6, 3};
    double twice = 0;
    for (int i = 0; i < 8; ++i) {
        int j = (i + 1) % 8;
        twice += xs[i] * ys[j] - xs[j] * ys[i];
    }
    CHECK(std::fabs(twice) / 2 == 63.0);
}

TEST_CASE("error ordering against pi") {
    auto h = hemaka_pi();
    auto r = rhind_octagon_pi();
    CHECK(h.error_vs_pi > 0);
    CHECK(r.error_vs_pi > 0);
    CHECK(h.error_vs_pi < r.error_vs_pi);
    CHECK(h.error_vs_pi == doctest::Approx(0.00126448926735).epsilon(1e-9));
    CHECK(r.error_vs_pi == doctest::Approx(0.0189).epsilon(1e-2));
}

TEST_CASE("pi reference literal agrees with an independent series") {
    Rational machin = oracle::machin_pi(55);
    Rational diff = abs(machin - pi_reference());
    CHECK(diff < Rational(BigInt(1), pow10(49)));
}

TEST_CASE("derivations are stable across calls") {
    auto a = hemaka_pi();
    auto b = hemaka_pi();
    CHECK(a.derivation == b.derivation);
    CHECK(a.error_vs_pi == b.error_vs_pi);
}

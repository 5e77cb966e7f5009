#pragma once

#include <string>
#include <vector>

#include "kha/rational.hpp"

namespace kha {

// The two rational approximations of pi that survive from Egyptian sources:
// the game-disk decoration ratio 66/21 and the Rhind papyrus octagon
// estimate. Both are exact rationals; pi itself is not constructible and
// never enters the arithmetic.

struct PiApproximation {
    std::string name;
    Rational value;
    std::string decimal_2;                // value to two decimal digits
    std::vector<std::string> derivation;  // human-readable reconstruction steps
    double error_vs_pi = 0;               // |value - pi| against the 50-digit reference
};

// 66/21 from the Hemaka disk decoration, reduced to 22/7, printed 3.14.
PiApproximation hemaka_pi();

// Octagon method: a circle of diameter 9 approximated by the corner-cut
// square of area 63 ~ 64, giving 256/81. The octagon area in the derivation
// is recomputed by an exact shoelace pass over the eight vertices.
PiApproximation rhind_octagon_pi();

// Fixed 50-decimal-digit rational reference for error reporting; the test
// suite cross-checks it against an independent series computation.
const Rational& pi_reference();

}  // namespace kha

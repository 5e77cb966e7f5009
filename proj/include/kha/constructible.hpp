#pragma once

#include <memory>
#include <optional>
#include <string>

#include "kha/rational.hpp"

namespace kha {

// Exact arithmetic over the field of constructible reals: rationals closed
// under field operations and square roots of nonnegative elements. A value
// lives in a tower of real quadratic extensions
//
//     Q = F0 < F1 < ... < Fk,   F(i) = F(i-1)(sqrt(d_i)),
//
// where each adjoined radicand d_i is a positive element of F(i-1) that is
// not a square there. Within a fixed tower the coefficient representation
// (a + b*sqrt(d) recursively, down to Rational) is canonical, so equality,
// sign, and zero tests are exact and terminating.
//
// Values are immutable after creation and safe to share between threads.
//
// sqrt() first attempts to express the root inside the current tower
// (perfect-square detection) and only adjoins a new level when that fails;
// arithmetic between values over different towers merges the towers,
// skipping radicands that are already expressible. Results are demoted to
// the lowest level that represents them, so e.g. sqrt(2)*sqrt(2) is the
// plain rational 2.
class Constructible {
public:
    Constructible();                       // zero
    Constructible(long long n);
    Constructible(const Rational& q);      // rationals embed implicitly

    Constructible(const Constructible&) = default;
    Constructible(Constructible&&) noexcept = default;
    Constructible& operator=(const Constructible&) = default;
    Constructible& operator=(Constructible&&) noexcept = default;

    static Constructible from_rational(const Rational& q) { return Constructible(q); }

    // Exact sign: -1, 0, +1. Decidable for every value.
    int sign() const;
    bool is_zero() const;

    // Number of quadratic extensions below this value's field.
    int tower_depth() const;
    bool is_rational() const { return tower_depth() == 0; }
    std::optional<Rational> as_rational() const;

    Constructible operator-() const;
    Constructible& operator+=(const Constructible& o);
    Constructible& operator-=(const Constructible& o);
    Constructible& operator*=(const Constructible& o);
    Constructible& operator/=(const Constructible& o);  // throws DivisionByZero

    friend Constructible operator+(Constructible a, const Constructible& b) { a += b; return a; }
    friend Constructible operator-(Constructible a, const Constructible& b) { a -= b; return a; }
    friend Constructible operator*(Constructible a, const Constructible& b) { a *= b; return a; }
    friend Constructible operator/(Constructible a, const Constructible& b) { a /= b; return a; }

    // Nonnegative exact square root; throws NegativeRadicand when sign < 0.
    friend Constructible sqrt(const Constructible& x);

    friend bool equals(const Constructible& a, const Constructible& b);
    friend bool operator==(const Constructible& a, const Constructible& b) { return equals(a, b); }
    friend bool operator!=(const Constructible& a, const Constructible& b) { return !equals(a, b); }
    friend bool operator<(const Constructible& a, const Constructible& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Constructible& a, const Constructible& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Constructible& a, const Constructible& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const Constructible& a, const Constructible& b) { return (a - b).sign() >= 0; }

    // Fixed-point decimal with `digits` fractional digits; the printed value
    // differs from the exact one by less than 10^-digits. Rounds half away
    // from zero, decided exactly.
    std::string approx(int digits) const;

    double to_double() const;

    // Radical-expression serialization, e.g. "(1/2)+(3/2)*sqrt(2)". The
    // grammar is documented in the README next to the DSL grammar;
    // parse_radical() reads it back.
    std::string to_radical_string() const;

private:
    struct Node;
    struct Ext;
    struct Impl;

    using NodePtr = std::shared_ptr<const Node>;
    using ExtPtr = std::shared_ptr<const Ext>;

    Constructible(ExtPtr f, NodePtr n);

    ExtPtr field_;  // nullptr: the rationals
    NodePtr node_;  // value over field_
};

inline Constructible abs(const Constructible& x) { return x.sign() < 0 ? -x : x; }

// Parses the radical-expression grammar produced by to_radical_string()
// (sums/differences of products of rationals, parenthesized groups, and
// sqrt(...) terms). Throws UnparseableRadical on syntax errors and on
// expressions that do not evaluate (negative radicand, zero division).
Constructible parse_radical(std::string_view text);

}  // namespace kha

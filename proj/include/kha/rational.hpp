#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "kha/error.hpp"

namespace kha {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow10(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 0; i < n; ++i) r *= 10;
    return r;
}

// Decimal digit-string to integer. cpp_int's own string constructor treats a
// leading 0 as an octal prefix, so leading zeros are stripped first.
inline BigInt parse_decimal_digits(std::string_view s) {
    size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return BigInt(std::string(s.substr(i)));
}

// Exact rational number, always in canonical reduced form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero represented as 0/1. Backed by
// boost::multiprecision, which maintains the canonical form on every
// operation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) fail(Errc::division_by_zero, "rational with zero denominator");
        v_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
    }
    explicit Rational(const BigRat& v) : v_(v) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    const BigRat& raw() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(BigRat(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRat(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(Errc::division_by_zero, "rational division by zero");
        return Rational(BigRat(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational reciprocal() const {
        if (is_zero()) fail(Errc::division_by_zero, "reciprocal of zero");
        return Rational(BigRat(1 / v_));
    }

    // "n" when integral, else "n/d"; sign on the numerator.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // Accepts an optionally signed integer or fraction: "-3", "22/7", "+1/2".
    static std::optional<Rational> parse(std::string_view text);

    double to_double() const { return v_.convert_to<double>(); }

private:
    BigRat v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::optional<Rational> Rational::parse(std::string_view text) {
    size_t i = 0;
    auto digits = [&](BigInt& out) -> bool {
        size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) return false;
        out = parse_decimal_digits(text.substr(start, i - start));
        return true;
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    BigInt num;
    if (!digits(num)) return std::nullopt;
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(den) || den == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace kha

#pragma once

// Independent oracles for the test suites. Everything here deliberately
// avoids the library's Constructible tower arithmetic: signs come from
// rational interval refinement over expression trees, geometry from plain
// double closed forms, and pi from a Machin-series computation.

#include <cmath>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "kha/rational.hpp"

namespace oracle {

using kha::BigInt;
using kha::BigRat;
using kha::Rational;

// --- rational interval arithmetic ------------------------------------

struct Interval {
    BigRat lo, hi;
};

inline Interval exact(const BigRat& v) { return {v, v}; }

inline Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

inline Interval sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

inline Interval mul(const Interval& a, const Interval& b) {
    BigRat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    BigRat lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return {lo, hi};
}

// Division requires the divisor interval to exclude zero.
inline std::optional<Interval> div(const Interval& a, const Interval& b) {
    if (b.lo <= 0 && b.hi >= 0) return std::nullopt;
    Interval inv{1 / b.hi, 1 / b.lo};
    return mul(a, inv);
}

inline BigRat sqrt_lower(const BigRat& r, unsigned bits) {
    if (r <= 0) return BigRat(0);
    BigInt n = numerator(r), d = denominator(r);
    BigInt s = boost::multiprecision::sqrt(BigInt((n * d) << (2 * bits)));
    return BigRat(s, d << bits);
}

inline BigRat sqrt_upper(const BigRat& r, unsigned bits) {
    if (r <= 0) return BigRat(0);
    BigInt n = numerator(r), d = denominator(r);
    BigInt s = boost::multiprecision::sqrt(BigInt((n * d) << (2 * bits)));
    return BigRat(s + 1, d << bits);
}

// Nonnegative square root; the low end clamps at zero.
inline Interval sqrt(const Interval& a, unsigned bits) {
    return {sqrt_lower(a.lo, bits), sqrt_upper(a.hi, bits)};
}

// --- random expression trees ------------------------------------------

struct Expr {
    enum class Op { constant, add, sub, mul, div, neg_sqrt_guard, sqrt, square_sqrt };
    Op op = Op::constant;
    Rational value;
    std::unique_ptr<Expr> a, b;
};

// Interval evaluation at the given working precision (bits of sqrt
// refinement). nullopt when a divisor interval straddles zero at this
// precision.
inline std::optional<Interval> eval_interval(const Expr& e, unsigned bits) {
    switch (e.op) {
        case Expr::Op::constant: return exact(e.value.raw());
        case Expr::Op::add: {
            auto x = eval_interval(*e.a, bits), y = eval_interval(*e.b, bits);
            if (!x || !y) return std::nullopt;
            return add(*x, *y);
        }
        case Expr::Op::sub: {
            auto x = eval_interval(*e.a, bits), y = eval_interval(*e.b, bits);
            if (!x || !y) return std::nullopt;
            return sub(*x, *y);
        }
        case Expr::Op::mul: {
            auto x = eval_interval(*e.a, bits), y = eval_interval(*e.b, bits);
            if (!x || !y) return std::nullopt;
            return mul(*x, *y);
        }
        case Expr::Op::div: {
            auto x = eval_interval(*e.a, bits), y = eval_interval(*e.b, bits);
            if (!x || !y) return std::nullopt;
            return div(*x, *y);
        }
        case Expr::Op::neg_sqrt_guard: {
            auto x = eval_interval(*e.a, bits);
            if (!x) return std::nullopt;
            return sqrt(sub(exact(BigRat(0)), *x), bits);
        }
        case Expr::Op::sqrt: {
            auto x = eval_interval(*e.a, bits);
            if (!x) return std::nullopt;
            return sqrt(*x, bits);
        }
        case Expr::Op::square_sqrt: {
            auto x = eval_interval(*e.a, bits);
            if (!x) return std::nullopt;
            return sqrt(mul(*x, *x), bits);
        }
    }
    return std::nullopt;
}

// Sign by refinement: +1/-1 when the interval separates from zero by 100
// decimal digits of work (or more), 0 when it keeps straddling zero up to
// the cap, which for these trees means the value is exactly zero.
inline int interval_sign(const Expr& e, unsigned startBits = 352, unsigned capBits = 2816) {
    for (unsigned bits = startBits; bits <= capBits; bits *= 2) {
        auto iv = eval_interval(e, bits);
        if (!iv) continue;  // divisor not yet separated; refine
        if (iv->lo > 0) return 1;
        if (iv->hi < 0) return -1;
        if (iv->lo == iv->hi) return 0;  // exact rational zero
    }
    return 0;
}

class ExprGen {
public:
    explicit ExprGen(uint64_t seed) : rng_(seed) {}

    std::unique_ptr<Expr> constant() {
        auto e = std::make_unique<Expr>();
        e->op = Expr::Op::constant;
        std::uniform_int_distribution<int> num(-10, 10);
        std::uniform_int_distribution<int> den(1, 10);
        e->value = Rational(num(rng_), den(rng_));
        return e;
    }

    std::unique_ptr<Expr> tree(int maxDepth) {
        if (maxDepth <= 0) return constant();
        std::uniform_int_distribution<int> pick(0, 9);
        int p = pick(rng_);
        auto e = std::make_unique<Expr>();
        if (p <= 1) return constant();
        if (p <= 3) {
            e->op = Expr::Op::add;
        } else if (p <= 5) {
            e->op = Expr::Op::sub;
        } else if (p <= 7) {
            e->op = Expr::Op::mul;
        } else if (p == 8) {
            e->op = Expr::Op::div;
        } else {
            e->op = Expr::Op::sqrt;
        }
        e->a = tree(maxDepth - 1);
        if (e->op == Expr::Op::div) {
            e->b = tree(maxDepth - 1);
            // keep divisors decidedly nonzero, by the oracle's own account
            if (interval_sign(*e->b, 352, 704) == 0) {
                e->op = Expr::Op::add;
                e->b = constant();
            }
        } else if (e->op == Expr::Op::add || e->op == Expr::Op::sub || e->op == Expr::Op::mul) {
            e->b = tree(maxDepth - 1);
        } else if (e->op == Expr::Op::sqrt) {
            int s = interval_sign(*e->a, 352, 704);
            if (s < 0)
                e->op = Expr::Op::neg_sqrt_guard;
            else if (s == 0)
                e->op = Expr::Op::square_sqrt;
        }
        return e;
    }

private:
    std::mt19937_64 rng_;
};

// --- float analytic geometry ------------------------------------------

struct DPoint {
    double x = 0, y = 0;
};

// Line through p,q meeting the circle at center c radius r, closed-form in
// doubles, ordered by the line parameter.
inline std::vector<DPoint> line_circle(DPoint p, DPoint q, DPoint c, double r) {
    double dx = q.x - p.x, dy = q.y - p.y;
    double fx = p.x - c.x, fy = p.y - c.y;
    double a = dx * dx + dy * dy;
    double b = fx * dx + fy * dy;
    double k = fx * fx + fy * fy - r * r;
    double disc = b * b - a * k;
    if (disc < 0) return {};
    double root = std::sqrt(disc);
    if (disc == 0) return {{p.x + (-b / a) * dx, p.y + (-b / a) * dy}};
    double t1 = (-b - root) / a, t2 = (-b + root) / a;
    return {{p.x + t1 * dx, p.y + t1 * dy}, {p.x + t2 * dx, p.y + t2 * dy}};
}

// Circles (c1,r1), (c2,r2); first point left of c1 -> c2.
inline std::vector<DPoint> circle_circle(DPoint c1, double r1, DPoint c2, double r2) {
    double ex = c2.x - c1.x, ey = c2.y - c1.y;
    double d2 = ex * ex + ey * ey;
    if (d2 == 0) return {};
    double alpha = (d2 + r1 * r1 - r2 * r2) / (2 * d2);
    double fx = c1.x + alpha * ex, fy = c1.y + alpha * ey;
    double h2 = r1 * r1 - alpha * alpha * d2;
    if (h2 < 0) return {};
    if (h2 == 0) return {{fx, fy}};
    double w = std::sqrt(h2 / d2);
    return {{fx - w * ey, fy + w * ex}, {fx + w * ey, fy - w * ex}};
}

// --- pi by Machin's formula --------------------------------------------

// pi with error below 10^-digits, from 16*atan(1/5) - 4*atan(1/239).
inline Rational machin_pi(unsigned digits) {
    BigRat limit(1, kha::pow10(digits + 5));
    auto atanInv = [&](long long x) {
        BigRat sum(0);
        BigRat term(1, x);
        BigRat x2(BigInt(x) * x);
        long long k = 0;
        while (term > limit) {
            BigRat piece = term / (2 * k + 1);
            sum += (k % 2 == 0) ? piece : -piece;
            term /= x2;
            ++k;
        }
        return sum;
    };
    return Rational(BigRat(16 * atanInv(5) - 4 * atanInv(239)));
}

}  // namespace oracle

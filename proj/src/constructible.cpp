#include "kha/constructible.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <vector>

namespace kha {

// Element of a field in the tower. A leaf holds a rational; an inner node
// holds lo + hi*sqrt(d) where d is the radicand of the extension at this
// depth and lo/hi are elements one level down.
struct Constructible::Node {
    Rational rat;
    NodePtr lo, hi;
    bool leaf() const { return !lo; }
};

// Quadratic extension descriptor: base field (nullptr = Q) plus the adjoined
// radicand, an element of the base field. Shared between values so that the
// common same-tower case is a pointer comparison.
struct Constructible::Ext {
    ExtPtr base;
    NodePtr radicand;
    int depth = 0;
};

struct Constructible::Impl {
    using Node = Constructible::Node;
    using Ext = Constructible::Ext;

    static NodePtr leaf(Rational q) {
        auto n = std::make_shared<Node>();
        n->rat = std::move(q);
        return n;
    }

    static NodePtr pair(NodePtr lo, NodePtr hi) {
        auto n = std::make_shared<Node>();
        n->lo = std::move(lo);
        n->hi = std::move(hi);
        return n;
    }

    static ExtPtr extend(ExtPtr base, NodePtr radicand) {
        auto e = std::make_shared<Ext>();
        e->depth = base ? base->depth + 1 : 1;
        e->base = std::move(base);
        e->radicand = std::move(radicand);
        return e;
    }

    static int depth_of(const Ext* f) { return f ? f->depth : 0; }

    static NodePtr zero_at(const Ext* f) {
        if (!f) return leaf(Rational());
        NodePtr z = zero_at(f->base.get());
        return pair(z, z);
    }

    static NodePtr one_at(const Ext* f) {
        if (!f) return leaf(Rational(1));
        return pair(one_at(f->base.get()), zero_at(f->base.get()));
    }

    // Embeds an element of f's base field at the bottom of a pair node.
    static NodePtr lift_one(const Ext* f, NodePtr x) {
        return pair(std::move(x), zero_at(f->base.get()));
    }

    // Lifts a rational all the way into f.
    static NodePtr lift_rational(const Ext* f, const Rational& q) {
        if (!f) return leaf(q);
        return pair(lift_rational(f->base.get(), q), zero_at(f->base.get()));
    }

    static bool n_is_zero(const Node* a) {
        if (a->leaf()) return a->rat.is_zero();
        return n_is_zero(a->lo.get()) && n_is_zero(a->hi.get());
    }

    // Structural identity. Valid as value equality only for two elements of
    // the same field, where the coefficient representation is canonical.
    static bool n_identical(const Node* a, const Node* b) {
        if (a == b) return true;
        if (a->leaf() != b->leaf()) return false;
        if (a->leaf()) return a->rat == b->rat;
        return n_identical(a->lo.get(), b->lo.get()) && n_identical(a->hi.get(), b->hi.get());
    }

    static bool same_field(const Ext* f, const Ext* g) {
        if (f == g) return true;
        if (!f || !g || f->depth != g->depth) return false;
        return same_field(f->base.get(), g->base.get()) &&
               n_identical(f->radicand.get(), g->radicand.get());
    }

    static NodePtr n_neg(const Node* a) {
        if (a->leaf()) return leaf(-a->rat);
        return pair(n_neg(a->lo.get()), n_neg(a->hi.get()));
    }

    static NodePtr n_add(const Ext* f, const Node* a, const Node* b) {
        if (!f) return leaf(a->rat + b->rat);
        const Ext* e = f->base.get();
        return pair(n_add(e, a->lo.get(), b->lo.get()), n_add(e, a->hi.get(), b->hi.get()));
    }

    static NodePtr n_sub(const Ext* f, const Node* a, const Node* b) {
        if (!f) return leaf(a->rat - b->rat);
        const Ext* e = f->base.get();
        return pair(n_sub(e, a->lo.get(), b->lo.get()), n_sub(e, a->hi.get(), b->hi.get()));
    }

    static NodePtr n_mul(const Ext* f, const Node* a, const Node* b) {
        if (!f) return leaf(a->rat * b->rat);
        if (n_is_zero(a)) return zero_at(f);
        if (n_is_zero(b)) return zero_at(f);
        const Ext* e = f->base.get();
        // (a0 + a1 r)(b0 + b1 r) = (a0 b0 + a1 b1 d) + (a0 b1 + a1 b0) r,  r = sqrt(d)
        NodePtr a0b0 = n_mul(e, a->lo.get(), b->lo.get());
        NodePtr a1b1 = n_mul(e, a->hi.get(), b->hi.get());
        NodePtr lo = n_add(e, a0b0.get(), n_mul(e, a1b1.get(), f->radicand.get()).get());
        NodePtr hi = n_add(e, n_mul(e, a->lo.get(), b->hi.get()).get(),
                           n_mul(e, a->hi.get(), b->lo.get()).get());
        return pair(std::move(lo), std::move(hi));
    }

    static NodePtr n_sqr(const Ext* f, const Node* a) { return n_mul(f, a, a); }

    // Field inverse; caller guarantees a != 0.
    static NodePtr n_inv(const Ext* f, const Node* a) {
        if (!f) return leaf(a->rat.reciprocal());
        const Ext* e = f->base.get();
        if (n_is_zero(a->hi.get())) return pair(n_inv(e, a->lo.get()), zero_at(e));
        // 1/(a0 + a1 r) = (a0 - a1 r)/(a0^2 - a1^2 d); the norm is nonzero
        // because d is not a square in the base field.
        NodePtr norm = n_sub(e, n_sqr(e, a->lo.get()).get(),
                             n_mul(e, n_sqr(e, a->hi.get()).get(), f->radicand.get()).get());
        NodePtr ninv = n_inv(e, norm.get());
        return pair(n_mul(e, a->lo.get(), ninv.get()),
                    n_neg(n_mul(e, a->hi.get(), ninv.get()).get()));
    }

    // Exact sign by case analysis on sign(a0), sign(a1), sign(a0^2 - a1^2 d).
    // Recursion strictly reduces tower depth, so it terminates.
    static int n_sign(const Ext* f, const Node* a) {
        if (!f) return a->rat.sign();
        const Ext* e = f->base.get();
        int slo = n_sign(e, a->lo.get());
        int shi = n_sign(e, a->hi.get());
        if (shi == 0) return slo;
        if (slo == 0) return shi;
        if (slo == shi) return slo;
        NodePtr norm = n_sub(e, n_sqr(e, a->lo.get()).get(),
                             n_mul(e, n_sqr(e, a->hi.get()).get(), f->radicand.get()).get());
        return slo * n_sign(e, norm.get());
    }

    // Attempts sqrt within the field f; nullopt when a is not a square there.
    static std::optional<NodePtr> n_sqrt_in_field(const Ext* f, const Node* a) {
        namespace mp = boost::multiprecision;
        if (!f) {
            if (a->rat.sign() < 0) return std::nullopt;
            BigInt num = a->rat.numerator(), den = a->rat.denominator();
            BigInt sn = mp::sqrt(num), sd = mp::sqrt(den);
            if (sn * sn != num || sd * sd != den) return std::nullopt;
            return leaf(Rational(sn, sd));
        }
        const Ext* e = f->base.get();
        const Node* d = f->radicand.get();
        if (n_is_zero(a->hi.get())) {
            if (auto r = n_sqrt_in_field(e, a->lo.get())) return lift_one(f, std::move(*r));
            // sqrt(x) = q*sqrt(d) with q^2 = x/d
            NodePtr quot = n_mul(e, a->lo.get(), n_inv(e, d).get());
            if (auto r = n_sqrt_in_field(e, quot.get()))
                return pair(zero_at(e), std::move(*r));
            return std::nullopt;
        }
        // (p + q r)^2 = a0 + a1 r needs s = sqrt(a0^2 - a1^2 d) in the base
        // field; then p^2 is (a0 + s)/2 or (a0 - s)/2 and q = a1/(2p).
        NodePtr disc = n_sub(e, n_sqr(e, a->lo.get()).get(),
                             n_mul(e, n_sqr(e, a->hi.get()).get(), d).get());
        auto s = n_sqrt_in_field(e, disc.get());
        if (!s) return std::nullopt;
        NodePtr sTrimmed = n_sign(e, s->get()) < 0 ? n_neg(s->get()) : *s;
        NodePtr half = lift_rational(e, Rational(1, 2));
        for (int which = 0; which < 2; ++which) {
            NodePtr cand = which == 0 ? n_add(e, a->lo.get(), sTrimmed.get())
                                      : n_sub(e, a->lo.get(), sTrimmed.get());
            cand = n_mul(e, cand.get(), half.get());
            if (n_sign(e, cand.get()) < 0) continue;
            auto p = n_sqrt_in_field(e, cand.get());
            if (!p || n_is_zero(p->get())) continue;
            NodePtr twoP = n_add(e, p->get(), p->get());
            NodePtr q = n_mul(e, a->hi.get(), n_inv(e, twoP.get()).get());
            return pair(std::move(*p), std::move(q));
        }
        return std::nullopt;
    }

    // Drops top levels whose sqrt component is zero, keeping values at the
    // lowest field that represents them.
    static void demote(ExtPtr& f, NodePtr& n) {
        while (f && n_is_zero(n->hi.get())) {
            n = n->lo;
            f = f->base;
        }
    }

    // --- tower merging ------------------------------------------------

    static bool is_ancestor(const Ext* anc, const Ext* f) {
        int da = depth_of(anc), df = depth_of(f);
        if (da > df) return false;
        while (df > da) {
            f = f->base.get();
            --df;
        }
        return same_field(anc, f);
    }

    static NodePtr lift_through(const ExtPtr& target, int fromDepth, NodePtr n) {
        // Wraps n (an element of the ancestor at fromDepth) up to target.
        std::vector<const Ext*> chain;
        const Ext* f = target.get();
        while (depth_of(f) > fromDepth) {
            chain.push_back(f);
            f = f->base.get();
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) n = lift_one(*it, std::move(n));
        return n;
    }

    struct Merged {
        ExtPtr field;
        NodePtr a, b;
    };

    static std::vector<const Ext*> chain_bottom_up(const Ext* f) {
        std::vector<const Ext*> c;
        while (f) {
            c.push_back(f);
            f = f->base.get();
        }
        std::vector<const Ext*> r(c.rbegin(), c.rend());
        return r;
    }

    static Merged merge(const ExtPtr& fa, NodePtr a, const ExtPtr& fb, NodePtr b) {
        if (same_field(fa.get(), fb.get())) return {fa, std::move(a), std::move(b)};
        if (is_ancestor(fb.get(), fa.get()))
            return {fa, a, lift_through(fa, depth_of(fb.get()), std::move(b))};
        if (is_ancestor(fa.get(), fb.get()))
            return {fb, lift_through(fb, depth_of(fa.get()), std::move(a)), b};

        // General case: re-express b's tower over a's, adjoining only the
        // radicands that are not already squares in the merged field.
        ExtPtr F = fa;
        NodePtr aN = std::move(a);
        std::vector<const Ext*> bch = chain_bottom_up(fb.get());
        std::vector<NodePtr> sqrtImg(bch.size());

        std::function<NodePtr(const Node*, int)> reex = [&](const Node* n, int level) -> NodePtr {
            if (level == 0) return lift_rational(F.get(), n->rat);
            NodePtr lo = reex(n->lo.get(), level - 1);
            NodePtr hi = reex(n->hi.get(), level - 1);
            return n_add(F.get(), lo.get(), n_mul(F.get(), hi.get(), sqrtImg[level - 1].get()).get());
        };

        for (size_t i = 0; i < bch.size(); ++i) {
            NodePtr d = reex(bch[i]->radicand.get(), static_cast<int>(i));
            if (auto s = n_sqrt_in_field(F.get(), d.get())) {
                NodePtr img = n_sign(F.get(), s->get()) < 0 ? n_neg(s->get()) : *s;
                sqrtImg[i] = std::move(img);
            } else {
                ExtPtr F2 = extend(F, std::move(d));
                aN = lift_one(F2.get(), std::move(aN));
                for (auto& img : sqrtImg)
                    if (img) img = lift_one(F2.get(), std::move(img));
                sqrtImg[i] = pair(zero_at(F.get()), one_at(F.get()));
                F = std::move(F2);
            }
        }
        NodePtr bN = reex(b.get(), static_cast<int>(bch.size()));
        return {std::move(F), std::move(aN), std::move(bN)};
    }

    // --- rational interval evaluation ---------------------------------

    struct Iv {
        BigRat lo, hi;
    };

    static Iv iv_add(const Iv& x, const Iv& y) { return {x.lo + y.lo, x.hi + y.hi}; }

    static Iv iv_mul(const Iv& x, const Iv& y) {
        BigRat c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
        BigRat lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < lo) lo = c[i];
            if (c[i] > hi) hi = c[i];
        }
        return {lo, hi};
    }

    static BigRat sqrt_lower(const BigRat& r, unsigned m) {
        BigInt n = numerator(r), d = denominator(r);
        BigInt s = boost::multiprecision::sqrt(BigInt((n * d) << (2 * m)));
        return BigRat(s, d << m);
    }

    static BigRat sqrt_upper(const BigRat& r, unsigned m) {
        BigInt n = numerator(r), d = denominator(r);
        BigInt s = boost::multiprecision::sqrt(BigInt((n * d) << (2 * m)));
        return BigRat(s + 1, d << m);
    }

    static Iv iv_sqrt(Iv x, unsigned m) {
        if (x.lo < 0) x.lo = 0;  // radicands are nonnegative by invariant
        return {sqrt_lower(x.lo, m), sqrt_upper(x.hi, m)};
    }

    struct IvCtx {
        unsigned m;
        std::map<const Ext*, Iv> sqrt_cache;
    };

    static Iv iv_eval(const Ext* f, const Node* n, IvCtx& ctx) {
        if (!f) return {n->rat.raw(), n->rat.raw()};
        const Ext* e = f->base.get();
        Iv sq;
        auto it = ctx.sqrt_cache.find(f);
        if (it != ctx.sqrt_cache.end()) {
            sq = it->second;
        } else {
            Iv rad = iv_eval(e, f->radicand.get(), ctx);
            sq = iv_sqrt(rad, ctx.m);
            ctx.sqrt_cache.emplace(f, sq);
        }
        Iv lo = iv_eval(e, n->lo.get(), ctx);
        Iv hi = iv_eval(e, n->hi.get(), ctx);
        return iv_add(lo, iv_mul(hi, sq));
    }

    // Refines until the interval is narrower than `width`.
    static Iv iv_refine(const Ext* f, const Node* n, const BigRat& width) {
        unsigned m = 32;
        for (;;) {
            IvCtx ctx{m, {}};
            Iv iv = iv_eval(f, n, ctx);
            if (iv.hi - iv.lo < width) return iv;
            m *= 2;
        }
    }

    static BigInt floor_rat(const BigRat& r) {
        BigInt n = numerator(r), d = denominator(r);
        BigInt q = n / d;
        if (n < 0 && q * d != n) --q;
        return q;
    }
};

Constructible::Constructible() : node_(Impl::leaf(Rational())) {}
Constructible::Constructible(long long n) : node_(Impl::leaf(Rational(n))) {}
Constructible::Constructible(const Rational& q) : node_(Impl::leaf(q)) {}
Constructible::Constructible(ExtPtr f, NodePtr n) : field_(std::move(f)), node_(std::move(n)) {
    Impl::demote(field_, node_);
}

int Constructible::sign() const { return Impl::n_sign(field_.get(), node_.get()); }

bool Constructible::is_zero() const { return Impl::n_is_zero(node_.get()); }

int Constructible::tower_depth() const { return Impl::depth_of(field_.get()); }

std::optional<Rational> Constructible::as_rational() const {
    if (field_) return std::nullopt;
    return node_->rat;
}

Constructible Constructible::operator-() const {
    return Constructible(field_, Impl::n_neg(node_.get()));
}

Constructible& Constructible::operator+=(const Constructible& o) {
    auto m = Impl::merge(field_, node_, o.field_, o.node_);
    *this = Constructible(m.field, Impl::n_add(m.field.get(), m.a.get(), m.b.get()));
    return *this;
}

Constructible& Constructible::operator-=(const Constructible& o) {
    auto m = Impl::merge(field_, node_, o.field_, o.node_);
    *this = Constructible(m.field, Impl::n_sub(m.field.get(), m.a.get(), m.b.get()));
    return *this;
}

Constructible& Constructible::operator*=(const Constructible& o) {
    auto m = Impl::merge(field_, node_, o.field_, o.node_);
    *this = Constructible(m.field, Impl::n_mul(m.field.get(), m.a.get(), m.b.get()));
    return *this;
}

Constructible& Constructible::operator/=(const Constructible& o) {
    if (o.is_zero()) fail(Errc::division_by_zero, "constructible division by zero");
    auto m = Impl::merge(field_, node_, o.field_, o.node_);
    *this = Constructible(
        m.field, Impl::n_mul(m.field.get(), m.a.get(), Impl::n_inv(m.field.get(), m.b.get()).get()));
    return *this;
}

bool equals(const Constructible& a, const Constructible& b) {
    using I = Constructible::Impl;
    auto m = I::merge(a.field_, a.node_, b.field_, b.node_);
    return I::n_is_zero(I::n_sub(m.field.get(), m.a.get(), m.b.get()).get());
}

Constructible sqrt(const Constructible& x) {
    using I = Constructible::Impl;
    int sg = x.sign();
    if (sg < 0) fail(Errc::negative_radicand, "sqrt of negative value");
    if (sg == 0) return Constructible();
    if (auto r = I::n_sqrt_in_field(x.field_.get(), x.node_.get())) {
        Constructible::NodePtr n = I::n_sign(x.field_.get(), r->get()) < 0 ? I::n_neg(r->get()) : *r;
        return Constructible(x.field_, std::move(n));
    }
    auto f2 = I::extend(x.field_, x.node_);
    auto n = I::pair(I::zero_at(x.field_.get()), I::one_at(x.field_.get()));
    return Constructible(std::move(f2), std::move(n));
}

std::string Constructible::approx(int digits) const {
    assert(digits >= 1);
    int sg = sign();
    // magnitude scaled to an integer grid: n = round(|x| * 10^digits)
    Constructible mag = sg < 0 ? -*this : *this;
    Constructible scaled = mag * Rational(pow10(static_cast<unsigned>(digits)));

    BigInt n;
    if (scaled.is_zero()) {
        n = 0;
    } else {
        auto iv = Impl::iv_refine(scaled.field_.get(), scaled.node_.get(), BigRat(1, 4));
        BigInt k = Impl::floor_rat(iv.lo);
        if (k < 0) k = 0;
        // at most two steps given the interval width
        while ((scaled - Rational(BigInt(k + 1))).sign() >= 0) ++k;
        Constructible frac2 = (scaled - Rational(k)) * Rational(2);
        int t = (frac2 - Rational(1)).sign();
        n = t >= 0 ? k + 1 : k;  // ties round away from zero
    }

    std::string ds = n.str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    if (sg < 0 && n != 0) ds.insert(0, "-");
    return ds;
}

double Constructible::to_double() const {
    if (is_zero()) return 0.0;
    unsigned m = 64;
    for (;;) {
        Impl::IvCtx ctx{m, {}};
        auto iv = Impl::iv_eval(field_.get(), node_.get(), ctx);
        BigRat width = iv.hi - iv.lo;
        BigRat scale = iv.lo < 0 ? BigRat(-iv.lo) : iv.lo;
        if (BigRat h = iv.hi < 0 ? BigRat(-iv.hi) : iv.hi; h > scale) scale = h;
        if (scale < 1) scale = 1;
        if (width * BigRat(BigInt(1) << 60) < scale) {
            BigRat mid = (iv.lo + iv.hi) / 2;
            return mid.convert_to<double>();
        }
        m *= 2;
    }
}

std::string Constructible::to_radical_string() const {
    std::function<std::string(const Ext*, const Node*)> ser = [&](const Ext* f,
                                                                  const Node* n) -> std::string {
        if (!f) return n->rat.str();
        const Ext* e = f->base.get();
        return "(" + ser(e, n->lo.get()) + ")+(" + ser(e, n->hi.get()) + ")*sqrt(" +
               ser(e, f->radicand.get()) + ")";
    };
    return ser(field_.get(), node_.get());
}

}  // namespace kha

#include "kha/dsl.hpp"
#include "kha/grid.hpp"

namespace kha::dsl {

bool EvalResult::ok() const {
    for (const auto& d : diagnostics)
        if (d.severity == Severity::error) return false;
    return true;
}

namespace {

class Evaluator {
public:
    EvalResult run(const Program& prog) {
        for (const auto& stmt : prog.statements) {
            try {
                std::visit([&](const auto& s) { eval(s); }, stmt);
            } catch (const Error& e) {
                result_.diagnostics.push_back(
                    {Severity::error, span_of(stmt), errc_name(e.code()), e.what()});
                break;  // later statements may depend on the failed object
            }
        }
        result_.trace = sk_.trace();
        return std::move(result_);
    }

private:
    Sketch sk_;
    EvalResult result_;

    static Span span_of(const Stmt& stmt) {
        return std::visit([](const auto& s) { return s.span; }, stmt);
    }

    void warn(Span span, std::string code, std::string message) {
        result_.diagnostics.push_back(
            {Severity::warning, span, std::move(code), std::move(message)});
    }

    void eval(const PointDecl& d) {
        if (const auto* c = std::get_if<CoordExpr>(&d.expr)) {
            sk_.seed({Constructible(c->x.value), Constructible(c->y.value)}, d.name);
        } else if (const auto* ix = std::get_if<IntersectExpr>(&d.expr)) {
            sk_.intersection(ix->a, ix->b, ix->branch, "", d.name);
        } else if (const auto* mid = std::get_if<MidpointExpr>(&d.expr)) {
            midpoint_and_bisector(sk_, mid->a, mid->b, d.name);
        } else {
            const auto& tr = std::get<TransferExpr>(d.expr);
            transfer_distance(sk_, tr.p, tr.q, tr.along, tr.from, tr.side, d.name);
        }
        result_.scene.add(d.name, sk_.point_at(d.name), Role::auxiliary);
    }

    void eval(const PointPairDecl& d) {
        auto candidates = sk_.intersection_candidates(d.a, d.b);
        if (candidates.size() != 2)
            fail(Errc::no_such_intersection,
                 "intersect(" + d.a + ", " + d.b + ") has " + std::to_string(candidates.size()) +
                     " point(s), two names given");
        sk_.intersection(d.a, d.b, 0, "", d.name1);
        sk_.intersection(d.a, d.b, 1, "", d.name2);
        result_.scene.add(d.name1, sk_.point_at(d.name1), Role::auxiliary);
        result_.scene.add(d.name2, sk_.point_at(d.name2), Role::auxiliary);
    }

    void eval(const LineDecl& d) {
        if (const auto* l = std::get_if<LineExpr>(&d.expr)) {
            sk_.line(l->a, l->b, "", d.name);
        } else if (const auto* p = std::get_if<PerpExpr>(&d.expr)) {
            perpendicular_from_point(sk_, p->line, p->point, d.name);
        } else {
            const auto& ca = std::get<CopyAngleExpr>(d.expr);
            copy_angle(sk_, ca.vertex, ca.arm1, ca.arm2, ca.target_line, ca.target_vertex, ca.side,
                       d.name);
        }
        result_.scene.add(d.name, sk_.line_at(d.name), Role::figure);
    }

    void eval(const CircleDecl& d) {
        sk_.circle(d.expr.center, d.expr.through, "", d.name);
        result_.scene.add(d.name, sk_.circle_at(d.name), Role::figure);
    }

    void eval(const GridStmt& g) {
        auto wholeAtLeast1 = [](const NumberLit& n) {
            return n.value.is_integer() && n.value.sign() > 0;
        };
        if (!wholeAtLeast1(g.rows) || !wholeAtLeast1(g.cols))
            fail(Errc::invalid_grid_spec, "grid rows and cols must be positive integers");
        if (g.rows.value.numerator() > 1000 || g.cols.value.numerator() > 1000)
            fail(Errc::invalid_grid_spec, "grid dimensions too large");
        int rows = g.rows.value.numerator().convert_to<int>();
        int cols = g.cols.value.numerator().convert_to<int>();
        GridSpec spec = GridSpec::create(rows, cols, Constructible(1), Constructible(g.ratio.value));
        if (!spec.overlapping())
            warn(g.span, "non-overlapping",
                 "ratio " + g.ratio.value.str() + " <= 1/2: adjacent circles do not overlap");
        std::string o = sk_.seed({Constructible(0), Constructible(0)});
        std::string x = sk_.seed({Constructible(1), Constructible(0)});
        generate_grid_into(sk_, result_.scene, o, x, spec);
    }

    void eval(const RoleStmt& r) { result_.scene.set_role(r.target, r.role); }
};

}  // namespace

EvalResult evaluate(const Program& prog) { return Evaluator().run(prog); }

}  // namespace kha::dsl

#include "kha/dsl.hpp"

namespace kha::dsl {

namespace {

std::string side_name(HalfPlane s) { return s == HalfPlane::left ? "left" : "right"; }
std::string side_name(Direction s) { return s == Direction::forward ? "forward" : "backward"; }

std::string format_stmt(const PointDecl& d) {
    std::string rhs;
    if (const auto* c = std::get_if<CoordExpr>(&d.expr)) {
        rhs = "(" + c->x.value.str() + "," + c->y.value.str() + ")";
    } else if (const auto* ix = std::get_if<IntersectExpr>(&d.expr)) {
        rhs = "intersect(" + ix->a + "," + ix->b + ")[" + std::to_string(ix->branch) + "]";
    } else if (const auto* m = std::get_if<MidpointExpr>(&d.expr)) {
        rhs = "midpoint(" + m->a + "," + m->b + ")";
    } else {
        const auto& t = std::get<TransferExpr>(d.expr);
        rhs = "transfer(" + t.p + "," + t.q + "," + t.along + "," + t.from + "," +
              side_name(t.side) + ")";
    }
    return "point " + d.name + " = " + rhs;
}

std::string format_stmt(const PointPairDecl& d) {
    return "point " + d.name1 + "," + d.name2 + " = intersect(" + d.a + "," + d.b + ")";
}

std::string format_stmt(const LineDecl& d) {
    std::string rhs;
    if (const auto* l = std::get_if<LineExpr>(&d.expr)) {
        rhs = "line(" + l->a + "," + l->b + ")";
    } else if (const auto* p = std::get_if<PerpExpr>(&d.expr)) {
        rhs = "perp(" + p->line + "," + p->point + ")";
    } else {
        const auto& c = std::get<CopyAngleExpr>(d.expr);
        rhs = "copy_angle(" + c.vertex + "," + c.arm1 + "," + c.arm2 + "," + c.target_line + "," +
              c.target_vertex + "," + side_name(c.side) + ")";
    }
    return "line " + d.name + " = " + rhs;
}

std::string format_stmt(const CircleDecl& d) {
    return "circle " + d.name + " = circle(" + d.expr.center + "," + d.expr.through + ")";
}

std::string format_stmt(const GridStmt& g) {
    return "grid(" + g.rows.value.str() + "," + g.cols.value.str() + "," + g.ratio.value.str() +
           ")";
}

std::string format_stmt(const RoleStmt& r) {
    return "role(" + r.target + "," + role_name(r.role) + ")";
}

}  // namespace

std::string format(const Program& prog) {
    std::string out;
    for (const auto& stmt : prog.statements) {
        out += std::visit([](const auto& s) { return format_stmt(s); }, stmt);
        out += "\n";
    }
    return out;
}

namespace {

bool eq(const NumberLit& a, const NumberLit& b) { return a.value == b.value; }

bool eq(const PointExpr& a, const PointExpr& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ca = std::get_if<CoordExpr>(&a)) {
        const auto& cb = std::get<CoordExpr>(b);
        return eq(ca->x, cb.x) && eq(ca->y, cb.y);
    }
    if (const auto* ia = std::get_if<IntersectExpr>(&a)) {
        const auto& ib = std::get<IntersectExpr>(b);
        return ia->a == ib.a && ia->b == ib.b && ia->branch == ib.branch;
    }
    if (const auto* ma = std::get_if<MidpointExpr>(&a)) {
        const auto& mb = std::get<MidpointExpr>(b);
        return ma->a == mb.a && ma->b == mb.b;
    }
    const auto& ta = std::get<TransferExpr>(a);
    const auto& tb = std::get<TransferExpr>(b);
    return ta.p == tb.p && ta.q == tb.q && ta.along == tb.along && ta.from == tb.from &&
           ta.side == tb.side;
}

bool eq(const LineRhs& a, const LineRhs& b) {
    if (a.index() != b.index()) return false;
    if (const auto* la = std::get_if<LineExpr>(&a)) {
        const auto& lb = std::get<LineExpr>(b);
        return la->a == lb.a && la->b == lb.b;
    }
    if (const auto* pa = std::get_if<PerpExpr>(&a)) {
        const auto& pb = std::get<PerpExpr>(b);
        return pa->line == pb.line && pa->point == pb.point;
    }
    const auto& ca = std::get<CopyAngleExpr>(a);
    const auto& cb = std::get<CopyAngleExpr>(b);
    return ca.vertex == cb.vertex && ca.arm1 == cb.arm1 && ca.arm2 == cb.arm2 &&
           ca.target_line == cb.target_line && ca.target_vertex == cb.target_vertex &&
           ca.side == cb.side;
}

bool eq(const Stmt& a, const Stmt& b) {
    if (a.index() != b.index()) return false;
    if (const auto* pa = std::get_if<PointDecl>(&a)) {
        const auto& pb = std::get<PointDecl>(b);
        return pa->name == pb.name && eq(pa->expr, pb.expr);
    }
    if (const auto* pa = std::get_if<PointPairDecl>(&a)) {
        const auto& pb = std::get<PointPairDecl>(b);
        return pa->name1 == pb.name1 && pa->name2 == pb.name2 && pa->a == pb.a && pa->b == pb.b;
    }
    if (const auto* la = std::get_if<LineDecl>(&a)) {
        const auto& lb = std::get<LineDecl>(b);
        return la->name == lb.name && eq(la->expr, lb.expr);
    }
    if (const auto* ca = std::get_if<CircleDecl>(&a)) {
        const auto& cb = std::get<CircleDecl>(b);
        return ca->name == cb.name && ca->expr.center == cb.expr.center &&
               ca->expr.through == cb.expr.through;
    }
    if (const auto* ga = std::get_if<GridStmt>(&a)) {
        const auto& gb = std::get<GridStmt>(b);
        return eq(ga->rows, gb.rows) && eq(ga->cols, gb.cols) && eq(ga->ratio, gb.ratio);
    }
    const auto& ra = std::get<RoleStmt>(a);
    const auto& rb = std::get<RoleStmt>(b);
    return ra.target == rb.target && ra.role == rb.role;
}

}  // namespace

bool structurally_equal(const Program& a, const Program& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (size_t i = 0; i < a.statements.size(); ++i)
        if (!eq(a.statements[i], b.statements[i])) return false;
    return true;
}

}  // namespace kha::dsl

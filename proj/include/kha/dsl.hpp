#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kha/constructions.hpp"

namespace kha::dsl {

// Construction script language (.csl): a linear record of compass-and-
// straightedge work. Coordinates in source are rationals only; irrational
// points can enter a program exclusively through constructions. Grammar:
//
//   program     := { statement } ;
//   statement   := decl | emit ;
//   decl        := "point" IDENT "=" pexpr
//                | "line" IDENT "=" lexpr
//                | "circle" IDENT "=" cexpr
//                | "point" IDENT "," IDENT "=" "intersect" "(" IDENT "," IDENT ")" ;
//   pexpr       := "(" number "," number ")"
//                | "intersect" "(" IDENT "," IDENT ")" "[" ("0"|"1") "]"
//                | "midpoint" "(" IDENT "," IDENT ")"
//                | "transfer" "(" IDENT "," IDENT "," IDENT "," IDENT "," side2 ")" ;
//   lexpr       := "line" "(" IDENT "," IDENT ")"
//                | "perp" "(" IDENT "," IDENT ")"
//                | "copy_angle" "(" IDENT "," IDENT "," IDENT "," IDENT "," IDENT "," side [","] ")" ;
//   cexpr       := "circle" "(" IDENT "," IDENT ")" ;
//   emit        := "grid" "(" number "," number "," number ")"
//                | "role" "(" IDENT "," ("lattice"|"figure"|"auxiliary") ")" ;
//   side        := "left" | "right" ;   side2 := "forward" | "backward" ;
//   number      := optionally signed INT [ "/" POSINT ] ;
//
// "#" starts a comment running to end of line; whitespace is insignificant.
// Identifiers are declared before use and never redefined; keywords are
// reserved.

struct Span {
    int line = 1;
    int col = 1;
};

enum class Severity { error, warning };

struct Diagnostic {
    Severity severity = Severity::error;
    Span span;
    std::string code;
    std::string message;
};

struct NumberLit {
    Rational value;
    Span span;
};

struct CoordExpr {
    NumberLit x, y;
};
struct IntersectExpr {
    std::string a, b;
    int branch = 0;
};
struct MidpointExpr {
    std::string a, b;
};
struct TransferExpr {
    std::string p, q, along, from;
    Direction side = Direction::forward;
};
using PointExpr = std::variant<CoordExpr, IntersectExpr, MidpointExpr, TransferExpr>;

struct LineExpr {
    std::string a, b;
};
struct PerpExpr {
    std::string line, point;
};
struct CopyAngleExpr {
    std::string vertex, arm1, arm2, target_line, target_vertex;
    HalfPlane side = HalfPlane::left;
};
using LineRhs = std::variant<LineExpr, PerpExpr, CopyAngleExpr>;

struct CircleExpr {
    std::string center, through;
};

struct PointDecl {
    std::string name;
    PointExpr expr;
    Span span;
};
struct PointPairDecl {
    std::string name1, name2;
    std::string a, b;
    Span span;
};
struct LineDecl {
    std::string name;
    LineRhs expr;
    Span span;
};
struct CircleDecl {
    std::string name;
    CircleExpr expr;
    Span span;
};
struct GridStmt {
    NumberLit rows, cols, ratio;
    Span span;
};
struct RoleStmt {
    std::string target;
    Role role = Role::auxiliary;
    Span span;
};

using Stmt = std::variant<PointDecl, PointPairDecl, LineDecl, CircleDecl, GridStmt, RoleStmt>;

struct Program {
    std::vector<Stmt> statements;
};

struct ParseResult {
    Program program;
    std::vector<Diagnostic> diagnostics;
    bool ok() const;
};

// Parses and name/kind-checks a program. The parser recovers at statement
// boundaries so one pass reports every error it can; it never throws and is
// bounded by the input length.
ParseResult parse(std::string_view source);

struct EvalResult {
    Scene scene;
    ConstructionTrace trace;
    std::vector<Diagnostic> diagnostics;
    bool ok() const;
};

// Evaluates a successfully parsed program. Pure function of the AST; the
// scene lists declared objects in statement order, and every construct
// lowers to primitive trace steps. Geometric failures become error
// diagnostics carrying the offending statement's span.
EvalResult evaluate(const Program& prog);

// Canonical text: one statement per line, single spaces around "=", no
// comments, no trailing whitespace. parse(format(p)) is structurally
// identical to p.
std::string format(const Program& prog);

// AST equality ignoring source spans.
bool structurally_equal(const Program& a, const Program& b);

}  // namespace kha::dsl

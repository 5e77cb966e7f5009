#include <cctype>
#include <map>
#include <optional>

#include "kha/dsl.hpp"

namespace kha::dsl {

bool ParseResult::ok() const {
    for (const auto& d : diagnostics)
        if (d.severity == Severity::error) return false;
    return true;
}

namespace {

enum class Tok {
    ident,
    integer,
    kw_point,
    kw_line,
    kw_circle,
    kw_intersect,
    kw_midpoint,
    kw_transfer,
    kw_perp,
    kw_copy_angle,
    kw_grid,
    kw_role,
    kw_lattice,
    kw_figure,
    kw_auxiliary,
    kw_left,
    kw_right,
    kw_forward,
    kw_backward,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    equal,
    slash,
    plus,
    minus,
    bad,
    eof,
};

struct Token {
    Tok kind = Tok::eof;
    std::string text;
    Span span;
    bool bol = false;  // first token on its line
};

const std::map<std::string, Tok, std::less<>>& keywords() {
    static const std::map<std::string, Tok, std::less<>> kw = {
        {"point", Tok::kw_point},         {"line", Tok::kw_line},
        {"circle", Tok::kw_circle},       {"intersect", Tok::kw_intersect},
        {"midpoint", Tok::kw_midpoint},   {"transfer", Tok::kw_transfer},
        {"perp", Tok::kw_perp},           {"copy_angle", Tok::kw_copy_angle},
        {"grid", Tok::kw_grid},           {"role", Tok::kw_role},
        {"lattice", Tok::kw_lattice},     {"figure", Tok::kw_figure},
        {"auxiliary", Tok::kw_auxiliary}, {"left", Tok::kw_left},
        {"right", Tok::kw_right},         {"forward", Tok::kw_forward},
        {"backward", Tok::kw_backward},
    };
    return kw;
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    bool bol = true;
    size_t i = 0;
    auto push = [&](Tok kind, std::string text, Span span) {
        out.push_back({kind, std::move(text), span, bol});
        bol = false;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
            bol = true;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
            ++i;
            ++col;
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                ++i;
                ++col;
            }
            continue;
        }
        Span here{line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                ++i;
                ++col;
            }
            std::string word(src.substr(start, i - start));
            auto it = keywords().find(word);
            push(it != keywords().end() ? it->second : Tok::ident, std::move(word), here);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                ++i;
                ++col;
            }
            push(Tok::integer, std::string(src.substr(start, i - start)), here);
            continue;
        }
        Tok kind = Tok::bad;
        switch (c) {
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '[': kind = Tok::lbracket; break;
            case ']': kind = Tok::rbracket; break;
            case ',': kind = Tok::comma; break;
            case '=': kind = Tok::equal; break;
            case '/': kind = Tok::slash; break;
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            default: kind = Tok::bad; break;
        }
        push(kind, std::string(1, c), here);
        ++i;
        ++col;
    }
    out.push_back({Tok::eof, "", {line, col}, bol});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    ParseResult run() {
        while (!at(Tok::eof)) {
            size_t before = pos_;
            statement();
            if (pos_ == before) advance();  // always make progress
        }
        return {std::move(program_), std::move(diags_)};
    }

private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    Program program_;
    std::vector<Diagnostic> diags_;
    std::map<std::string, ObjKind> declared_;

    const Token& cur() const { return tokens_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }
    void advance() {
        if (!at(Tok::eof)) ++pos_;
    }

    void error(Span span, std::string code, std::string message) {
        diags_.push_back({Severity::error, span, std::move(code), std::move(message)});
    }

    // Skips to the next statement keyword that starts a line.
    void recover() {
        while (!at(Tok::eof)) {
            const Token& t = cur();
            if (t.bol && (t.kind == Tok::kw_point || t.kind == Tok::kw_line ||
                          t.kind == Tok::kw_circle || t.kind == Tok::kw_grid ||
                          t.kind == Tok::kw_role))
                return;
            advance();
        }
    }

    bool expect(Tok k, const std::string& what) {
        if (at(k)) {
            advance();
            return true;
        }
        error(cur().span, "syntax", "expected " + what);
        return false;
    }

    std::optional<std::string> expect_ident(const std::string& what) {
        if (at(Tok::ident)) {
            std::string name = cur().text;
            advance();
            return name;
        }
        if (keywords().count(cur().text))
            error(cur().span, "reserved-name", "'" + cur().text + "' is a reserved word");
        else
            error(cur().span, "syntax", "expected " + what);
        return std::nullopt;
    }

    // Reference to a declared object; kindA/kindB are the acceptable kinds.
    std::optional<std::string> expect_ref(ObjKind kindA, ObjKind kindB, const std::string& what) {
        Span span = cur().span;
        auto name = expect_ident(what);
        if (!name) return std::nullopt;
        auto it = declared_.find(*name);
        if (it == declared_.end()) {
            error(span, "undefined-name", "'" + *name + "' is not declared");
            return std::nullopt;
        }
        if (it->second != kindA && it->second != kindB) {
            error(span, "type-mismatch", "'" + *name + "' is a " +
                                             std::string(kind_name(it->second)) + ", expected " +
                                             what);
            return std::nullopt;
        }
        return name;
    }

    std::optional<std::string> expect_ref(ObjKind kind, const std::string& what) {
        return expect_ref(kind, kind, what);
    }

    std::optional<NumberLit> number() {
        Span span = cur().span;
        bool neg = false;
        if (at(Tok::minus) || at(Tok::plus)) {
            neg = at(Tok::minus);
            advance();
        }
        if (!at(Tok::integer)) {
            error(cur().span, "syntax", "expected number");
            return std::nullopt;
        }
        BigInt num = parse_decimal_digits(cur().text);
        advance();
        BigInt den = 1;
        if (at(Tok::slash)) {
            advance();
            if (!at(Tok::integer)) {
                error(cur().span, "syntax", "expected denominator");
                return std::nullopt;
            }
            den = parse_decimal_digits(cur().text);
            if (den == 0) {
                error(cur().span, "syntax", "denominator must be positive");
                advance();
                return std::nullopt;
            }
            advance();
        }
        if (neg) num = -num;
        return NumberLit{Rational(num, den), span};
    }

    // Introduces a declaration, reporting redefinition. Returns whether the
    // name is usable.
    bool declare(const std::string& name, ObjKind kind, Span span) {
        auto [it, inserted] = declared_.emplace(name, kind);
        if (!inserted) {
            error(span, "redefinition", "'" + name + "' is already declared");
            return false;
        }
        (void)it;
        return true;
    }

    void statement() {
        switch (cur().kind) {
            case Tok::kw_point: point_stmt(); break;
            case Tok::kw_line: line_stmt(); break;
            case Tok::kw_circle: circle_stmt(); break;
            case Tok::kw_grid: grid_stmt(); break;
            case Tok::kw_role: role_stmt(); break;
            default:
                error(cur().span, "syntax", "expected a statement (point, line, circle, grid, role)");
                recover();
                break;
        }
    }

    void point_stmt() {
        Span span = cur().span;
        advance();  // point
        auto name = expect_ident("identifier");
        if (!name) return recover();
        if (at(Tok::comma)) {
            advance();
            auto name2 = expect_ident("identifier");
            if (!name2) return recover();
            if (!expect(Tok::equal, "'='")) return recover();
            if (!expect(Tok::kw_intersect, "'intersect'")) return recover();
            if (!expect(Tok::lparen, "'('")) return recover();
            auto a = expect_ref(ObjKind::line, ObjKind::circle, "line or circle");
            if (!a) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            auto b = expect_ref(ObjKind::line, ObjKind::circle, "line or circle");
            if (!b) return recover();
            if (!expect(Tok::rparen, "')'")) return recover();
            bool ok1 = declare(*name, ObjKind::point, span);
            bool ok2 = declare(*name2, ObjKind::point, span);
            if (ok1 && ok2)
                program_.statements.push_back(PointPairDecl{*name, *name2, *a, *b, span});
            return;
        }
        if (!expect(Tok::equal, "'='")) return recover();
        std::optional<PointExpr> expr = point_expr();
        if (!expr) return recover();
        if (declare(*name, ObjKind::point, span))
            program_.statements.push_back(PointDecl{*name, std::move(*expr), span});
    }

    std::optional<PointExpr> point_expr() {
        if (at(Tok::lparen)) {
            advance();
            auto x = number();
            if (!x) return std::nullopt;
            if (!expect(Tok::comma, "','")) return std::nullopt;
            auto y = number();
            if (!y) return std::nullopt;
            if (!expect(Tok::rparen, "')'")) return std::nullopt;
            return PointExpr{CoordExpr{*x, *y}};
        }
        if (at(Tok::kw_intersect)) {
            advance();
            if (!expect(Tok::lparen, "'('")) return std::nullopt;
            auto a = expect_ref(ObjKind::line, ObjKind::circle, "line or circle");
            if (!a) return std::nullopt;
            if (!expect(Tok::comma, "','")) return std::nullopt;
            auto b = expect_ref(ObjKind::line, ObjKind::circle, "line or circle");
            if (!b) return std::nullopt;
            if (!expect(Tok::rparen, "')'")) return std::nullopt;
            if (!expect(Tok::lbracket, "'['")) return std::nullopt;
            int branch = 0;
            if (at(Tok::integer) && (cur().text == "0" || cur().text == "1")) {
                branch = cur().text == "1" ? 1 : 0;
                advance();
            } else {
                error(cur().span, "syntax", "intersection branch must be 0 or 1");
                return std::nullopt;
            }
            if (!expect(Tok::rbracket, "']'")) return std::nullopt;
            return PointExpr{IntersectExpr{*a, *b, branch}};
        }
        if (at(Tok::kw_midpoint)) {
            advance();
            if (!expect(Tok::lparen, "'('")) return std::nullopt;
            auto a = expect_ref(ObjKind::point, "point");
            if (!a) return std::nullopt;
            if (!expect(Tok::comma, "','")) return std::nullopt;
            auto b = expect_ref(ObjKind::point, "point");
            if (!b) return std::nullopt;
            if (!expect(Tok::rparen, "')'")) return std::nullopt;
            return PointExpr{MidpointExpr{*a, *b}};
        }
        if (at(Tok::kw_transfer)) {
            advance();
            if (!expect(Tok::lparen, "'('")) return std::nullopt;
            auto p = expect_ref(ObjKind::point, "point");
            if (!p) return std::nullopt;
            if (!expect(Tok::comma, "','")) return std::nullopt;
            auto q = expect_ref(ObjKind::point, "point");
            if (!q) return std::nullopt;
            if (!expect(Tok::comma, "','")) return std::nullopt;
            auto along = expect_ref(ObjKind::line, "line");
            if (!along) return std::nullopt;
            if (!expect(Tok::comma, "','")) return std::nullopt;
            auto from = expect_ref(ObjKind::point, "point");
            if (!from) return std::nullopt;
            if (!expect(Tok::comma, "','")) return std::nullopt;
            Direction side;
            if (at(Tok::kw_forward)) {
                side = Direction::forward;
                advance();
            } else if (at(Tok::kw_backward)) {
                side = Direction::backward;
                advance();
            } else {
                error(cur().span, "syntax", "expected 'forward' or 'backward'");
                return std::nullopt;
            }
            if (!expect(Tok::rparen, "')'")) return std::nullopt;
            return PointExpr{TransferExpr{*p, *q, *along, *from, side}};
        }
        error(cur().span, "syntax", "expected a point expression");
        return std::nullopt;
    }

    void line_stmt() {
        Span span = cur().span;
        advance();  // line
        auto name = expect_ident("identifier");
        if (!name) return recover();
        if (!expect(Tok::equal, "'='")) return recover();
        std::optional<LineRhs> expr;
        if (at(Tok::kw_line)) {
            advance();
            if (!expect(Tok::lparen, "'('")) return recover();
            auto a = expect_ref(ObjKind::point, "point");
            if (!a) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            auto b = expect_ref(ObjKind::point, "point");
            if (!b) return recover();
            if (!expect(Tok::rparen, "')'")) return recover();
            expr = LineRhs{LineExpr{*a, *b}};
        } else if (at(Tok::kw_perp)) {
            advance();
            if (!expect(Tok::lparen, "'('")) return recover();
            auto l = expect_ref(ObjKind::line, "line");
            if (!l) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            auto p = expect_ref(ObjKind::point, "point");
            if (!p) return recover();
            if (!expect(Tok::rparen, "')'")) return recover();
            expr = LineRhs{PerpExpr{*l, *p}};
        } else if (at(Tok::kw_copy_angle)) {
            advance();
            if (!expect(Tok::lparen, "'('")) return recover();
            auto v = expect_ref(ObjKind::point, "point");
            if (!v) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            auto a1 = expect_ref(ObjKind::point, "point");
            if (!a1) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            auto a2 = expect_ref(ObjKind::point, "point");
            if (!a2) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            auto tl = expect_ref(ObjKind::line, "line");
            if (!tl) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            auto tv = expect_ref(ObjKind::point, "point");
            if (!tv) return recover();
            if (!expect(Tok::comma, "','")) return recover();
            HalfPlane side;
            if (at(Tok::kw_left)) {
                side = HalfPlane::left;
                advance();
            } else if (at(Tok::kw_right)) {
                side = HalfPlane::right;
                advance();
            } else {
                error(cur().span, "syntax", "expected 'left' or 'right'");
                return recover();
            }
            if (at(Tok::comma)) advance();  // optional trailing comma
            if (!expect(Tok::rparen, "')'")) return recover();
            expr = LineRhs{CopyAngleExpr{*v, *a1, *a2, *tl, *tv, side}};
        } else {
            error(cur().span, "syntax", "expected a line expression (line, perp, copy_angle)");
            return recover();
        }
        if (declare(*name, ObjKind::line, span))
            program_.statements.push_back(LineDecl{*name, std::move(*expr), span});
    }

    void circle_stmt() {
        Span span = cur().span;
        advance();  // circle
        auto name = expect_ident("identifier");
        if (!name) return recover();
        if (!expect(Tok::equal, "'='")) return recover();
        if (!expect(Tok::kw_circle, "'circle'")) return recover();
        if (!expect(Tok::lparen, "'('")) return recover();
        auto center = expect_ref(ObjKind::point, "point");
        if (!center) return recover();
        if (!expect(Tok::comma, "','")) return recover();
        auto through = expect_ref(ObjKind::point, "point");
        if (!through) return recover();
        if (!expect(Tok::rparen, "')'")) return recover();
        if (declare(*name, ObjKind::circle, span))
            program_.statements.push_back(CircleDecl{*name, CircleExpr{*center, *through}, span});
    }

    void grid_stmt() {
        Span span = cur().span;
        advance();  // grid
        if (!expect(Tok::lparen, "'('")) return recover();
        auto rows = number();
        if (!rows) return recover();
        if (!expect(Tok::comma, "','")) return recover();
        auto cols = number();
        if (!cols) return recover();
        if (!expect(Tok::comma, "','")) return recover();
        auto ratio = number();
        if (!ratio) return recover();
        if (!expect(Tok::rparen, "')'")) return recover();
        program_.statements.push_back(GridStmt{*rows, *cols, *ratio, span});
    }

    void role_stmt() {
        Span span = cur().span;
        advance();  // role
        if (!expect(Tok::lparen, "'('")) return recover();
        Span targetSpan = cur().span;
        auto target = expect_ident("identifier");
        if (!target) return recover();
        if (!declared_.count(*target)) {
            error(targetSpan, "undefined-name", "'" + *target + "' is not declared");
            return recover();
        }
        if (!expect(Tok::comma, "','")) return recover();
        Role role;
        if (at(Tok::kw_lattice)) {
            role = Role::lattice;
            advance();
        } else if (at(Tok::kw_figure)) {
            role = Role::figure;
            advance();
        } else if (at(Tok::kw_auxiliary)) {
            role = Role::auxiliary;
            advance();
        } else {
            error(cur().span, "syntax", "expected 'lattice', 'figure' or 'auxiliary'");
            return recover();
        }
        if (!expect(Tok::rparen, "')'")) return recover();
        program_.statements.push_back(RoleStmt{*target, role, span});
    }
};

}  // namespace

ParseResult parse(std::string_view source) { return Parser(source).run(); }

}  // namespace kha::dsl

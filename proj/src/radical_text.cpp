#include <cctype>
#include <string>

#include "kha/constructible.hpp"

namespace kha {

namespace {

// Recursive-descent reader for radical expressions:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := 'sqrt' '(' expr ')' | '(' expr ')' | rational
//   rational := INT ['/' POSINT]
// Whitespace is insignificant. Values are built with exact arithmetic, so a
// negative radicand or zero denominator surfaces here as a parse failure.
class RadicalReader {
public:
    explicit RadicalReader(std::string_view text) : text_(text) {}

    Constructible read() {
        Constructible v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail_here("trailing characters");
        return v;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail_here(const std::string& what) {
        fail(Errc::unparseable_radical,
             what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    Constructible expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Constructible v = term();
        if (neg) v = -v;
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Constructible term() {
        Constructible v = factor();
        while (eat('*')) v *= factor();
        return v;
    }

    Constructible factor() {
        skip_ws();
        if (eat_word("sqrt")) {
            if (!eat('(')) fail_here("expected '(' after sqrt");
            Constructible inner = expr();
            if (!eat(')')) fail_here("expected ')'");
            try {
                return sqrt(inner);
            } catch (const Error& e) {
                fail_here(e.what());
            }
        }
        if (eat('(')) {
            Constructible inner = expr();
            if (!eat(')')) fail_here("expected ')'");
            return inner;
        }
        return rational_lit();
    }

    Constructible rational_lit() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits0 = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits0) fail_here("expected number");
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            size_t digits1 = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == digits1) fail_here("expected denominator");
        }
        auto q = Rational::parse(text_.substr(start, pos_ - start));
        if (!q) fail_here("bad rational literal");
        return Constructible(*q);
    }
};

}  // namespace

Constructible parse_radical(std::string_view text) { return RadicalReader(text).read(); }

}  // namespace kha

#include "riroch/dsl.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace riroch::dsl {

TwistPoly LinExp::to_poly() const {
    TwistPoly p{Rational(shift)};
    if (has_n)
        p += TwistPoly::variable();
    return p;
}

std::string LinExp::str() const {
    if (!has_n)
        return std::to_string(shift);
    if (shift == 0)
        return "N";
    std::ostringstream out;
    out << "N" << (shift > 0 ? "+" : "-") << std::labs(shift);
    return out.str();
}

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, LParen, RParen, Comma, Semicolon, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return current_; }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t len = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++len;
            }
            if (len > 18)
                throw ParseError(start, "syntax error at offset " + std::to_string(start) +
                                            ": integer literal too large");
            current_ = {Tok::Int, text_.substr(start, len), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = {Tok::Ident, text_.substr(start, pos_ - start), start};
            return;
        }
        ++pos_;
        switch (c) {
        case '+': current_ = {Tok::Plus, "+", start}; return;
        case '-': current_ = {Tok::Minus, "-", start}; return;
        case '*': current_ = {Tok::Star, "*", start}; return;
        case '(': current_ = {Tok::LParen, "(", start}; return;
        case ')': current_ = {Tok::RParen, ")", start}; return;
        case ',': current_ = {Tok::Comma, ",", start}; return;
        case ';': current_ = {Tok::Semicolon, ";", start}; return;
        default:
            throw ParseError(start, "syntax error at offset " + std::to_string(start) +
                                        ": unexpected character '" + std::string(1, c) + "'");
        }
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

[[noreturn]] void fail_expected(const Token& got, const std::string& expected) {
    throw ParseError(got.offset, "syntax error at offset " + std::to_string(got.offset) +
                                     ": expected " + expected);
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse_expression_all() {
        ExprPtr e = expression();
        expect_end();
        return e;
    }

    CompleteIntersection parse_variety_all() {
        const Token head = lex_.current();
        if (head.kind != Tok::Ident || (head.text != "P" && head.text != "CI"))
            fail_expected(head, "'P' or 'CI'");
        lex_.advance();
        expect(Tok::LParen, "'('");
        const long first = integer();
        if (head.text == "P") {
            expect(Tok::RParen, "')'");
            expect_end();
            return CompleteIntersection(static_cast<int>(first), {});
        }
        expect(Tok::Semicolon, "';'");
        std::vector<long> degrees;
        degrees.push_back(integer());
        while (lex_.current().kind == Tok::Comma) {
            lex_.advance();
            degrees.push_back(integer());
        }
        expect(Tok::RParen, "')' or ','");
        expect_end();
        return CompleteIntersection(static_cast<int>(first), std::move(degrees));
    }

private:
    void expect(Tok kind, const std::string& what) {
        if (lex_.current().kind != kind)
            fail_expected(lex_.current(), what);
        lex_.advance();
    }

    void expect_end() {
        if (lex_.current().kind != Tok::End)
            fail_expected(lex_.current(), "end of input");
    }

    long integer() {
        bool negative = false;
        if (lex_.current().kind == Tok::Minus || lex_.current().kind == Tok::Plus) {
            negative = lex_.current().kind == Tok::Minus;
            lex_.advance();
        }
        if (lex_.current().kind != Tok::Int)
            fail_expected(lex_.current(), "an integer");
        const long v = std::stol(lex_.current().text);
        lex_.advance();
        return negative ? -v : v;
    }

    int small_order(const char* which) {
        const Token tok = lex_.current();
        const long v = integer();
        if (v < 0 || v > 3)
            throw ValidationError(std::string(which) + " order must be between 0 and 3 (got " +
                                  std::to_string(v) + " at offset " + std::to_string(tok.offset) +
                                  ")");
        return static_cast<int>(v);
    }

    LinExp linexp() {
        LinExp le;
        const Token tok = lex_.current();
        if (tok.kind == Tok::Ident && tok.text == "N") {
            lex_.advance();
            le.has_n = true;
            if (lex_.current().kind == Tok::Plus || lex_.current().kind == Tok::Minus) {
                const bool minus = lex_.current().kind == Tok::Minus;
                lex_.advance();
                if (lex_.current().kind != Tok::Int)
                    fail_expected(lex_.current(), "an integer");
                const long v = std::stol(lex_.current().text);
                lex_.advance();
                le.shift = minus ? -v : v;
            }
            return le;
        }
        if (tok.kind == Tok::Minus || tok.kind == Tok::Plus || tok.kind == Tok::Int) {
            le.shift = integer();
            return le;
        }
        fail_expected(tok, "an integer or 'N'");
    }

    ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr factor() {
        const Token tok = lex_.current();
        if (tok.kind == Tok::LParen) {
            lex_.advance();
            ExprPtr inner = expression();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (tok.kind != Tok::Ident)
            fail_expected(tok, "'O', 'Omega', 'T', 'K', 'Jet', 'Sym', 'dual', 'det', or '('");
        lex_.advance();
        if (tok.text == "Omega")
            return make({Expr::Kind::Omega});
        if (tok.text == "T")
            return make({Expr::Kind::Tangent});
        if (tok.text == "K")
            return make({Expr::Kind::Canonical});
        if (tok.text == "O") {
            expect(Tok::LParen, "'('");
            LinExp le = linexp();
            expect(Tok::RParen, "')'");
            Expr e{Expr::Kind::Line};
            e.lin = le;
            return make(std::move(e));
        }
        if (tok.text == "Jet" || tok.text == "Sym") {
            const bool jet = tok.text == "Jet";
            expect(Tok::LParen, "'('");
            const int ord = small_order(jet ? "Jet" : "Sym");
            expect(Tok::Comma, "','");
            ExprPtr child = expression();
            expect(Tok::RParen, "')'");
            Expr e{jet ? Expr::Kind::Jet : Expr::Kind::Sym};
            e.order = ord;
            e.lhs = std::move(child);
            return make(std::move(e));
        }
        if (tok.text == "dual" || tok.text == "det") {
            expect(Tok::LParen, "'('");
            ExprPtr child = expression();
            expect(Tok::RParen, "')'");
            Expr e{tok.text == "dual" ? Expr::Kind::Dual : Expr::Kind::Det};
            e.lhs = std::move(child);
            return make(std::move(e));
        }
        fail_expected(tok, "'O', 'Omega', 'T', 'K', 'Jet', 'Sym', 'dual', 'det', or '('");
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (lex_.current().kind == Tok::Star) {
            lex_.advance();
            Expr node{Expr::Kind::Mul};
            node.lhs = std::move(e);
            node.rhs = factor();
            e = make(std::move(node));
        }
        return e;
    }

    ExprPtr expression() {
        ExprPtr e = term();
        while (lex_.current().kind == Tok::Plus || lex_.current().kind == Tok::Minus) {
            const bool plus = lex_.current().kind == Tok::Plus;
            lex_.advance();
            Expr node{plus ? Expr::Kind::Add : Expr::Kind::Sub};
            node.lhs = std::move(e);
            node.rhs = term();
            e = make(std::move(node));
        }
        return e;
    }

    Lexer lex_;
};

int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    default: return 3;
    }
}

} // namespace

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.order != b.order || !(a.lin == b.lin))
        return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs) ||
        static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs))
        return false;
    if (a.lhs && !equal(*a.lhs, *b.lhs))
        return false;
    if (a.rhs && !equal(*a.rhs, *b.rhs))
        return false;
    return true;
}

std::string pretty(const Expr& e) {
    auto wrap = [](const Expr& child, bool needs_paren) {
        return needs_paren ? "(" + pretty(child) + ")" : pretty(child);
    };
    switch (e.kind) {
    case Expr::Kind::Line: return "O(" + e.lin.str() + ")";
    case Expr::Kind::Omega: return "Omega";
    case Expr::Kind::Tangent: return "T";
    case Expr::Kind::Canonical: return "K";
    case Expr::Kind::Jet: return "Jet(" + std::to_string(e.order) + ", " + pretty(*e.lhs) + ")";
    case Expr::Kind::Sym: return "Sym(" + std::to_string(e.order) + ", " + pretty(*e.lhs) + ")";
    case Expr::Kind::Dual: return "dual(" + pretty(*e.lhs) + ")";
    case Expr::Kind::Det: return "det(" + pretty(*e.lhs) + ")";
    case Expr::Kind::Add:
        return pretty(*e.lhs) + " + " + wrap(*e.rhs, precedence(e.rhs->kind) <= 1);
    case Expr::Kind::Sub:
        return pretty(*e.lhs) + " - " + wrap(*e.rhs, precedence(e.rhs->kind) <= 1);
    case Expr::Kind::Mul:
        return wrap(*e.lhs, precedence(e.lhs->kind) < 2) + " * " +
               wrap(*e.rhs, precedence(e.rhs->kind) <= 2);
    }
    return "?";
}

ExprPtr parse_bundle(const std::string& text) {
    Parser p(text);
    return p.parse_expression_all();
}

CompleteIntersection parse_variety(const std::string& text) {
    Parser p(text);
    return p.parse_variety_all();
}

VirtualBundle evaluate(const Expr& e, const CompleteIntersection& x, Mode mode) {
    switch (e.kind) {
    case Expr::Kind::Line: return VirtualBundle::line(x.dim(), e.lin.to_poly());
    case Expr::Kind::Omega: return cotangent_for_mode(x, mode);
    case Expr::Kind::Tangent: return dual(cotangent_for_mode(x, mode));
    case Expr::Kind::Canonical: return determinant(cotangent_for_mode(x, mode));
    case Expr::Kind::Jet:
        return tensor(principal_parts_ch(x, e.order, mode), evaluate(*e.lhs, x, mode));
    case Expr::Kind::Sym: return sym_power(e.order, evaluate(*e.lhs, x, mode));
    case Expr::Kind::Dual: return dual(evaluate(*e.lhs, x, mode));
    case Expr::Kind::Det: return determinant(evaluate(*e.lhs, x, mode));
    case Expr::Kind::Add: return riroch::sum(evaluate(*e.lhs, x, mode), evaluate(*e.rhs, x, mode));
    case Expr::Kind::Sub: return difference(evaluate(*e.lhs, x, mode), evaluate(*e.rhs, x, mode));
    case Expr::Kind::Mul: return tensor(evaluate(*e.lhs, x, mode), evaluate(*e.rhs, x, mode));
    }
    throw DomainError("unreachable bundle expression kind");
}

} // namespace riroch::dsl

#include "toriclog/parser.hpp"

#include "toriclog/errors.hpp"

#include <cctype>
#include <map>

namespace toriclog {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            cur_ = {Tok::end, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            cur_ = {Tok::number, s_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            cur_ = {Tok::ident, s_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': cur_ = {Tok::plus, "+", start}; return;
            case '-': cur_ = {Tok::minus, "-", start}; return;
            case '*': cur_ = {Tok::star, "*", start}; return;
            case '/': cur_ = {Tok::slash, "/", start}; return;
            case '^': cur_ = {Tok::caret, "^", start}; return;
            case '(': cur_ = {Tok::lparen, "(", start}; return;
            case ')': cur_ = {Tok::rparen, ")", start}; return;
            default:
                throw SyntaxError(start, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : lex_(text), nvars_(variables.size()) {
        for (std::size_t i = 0; i < variables.size(); ++i) index_[variables[i]] = i;
    }

    Polynomial parse() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::end) {
            // a primary right after a primary means implicit multiplication
            throw SyntaxError(t.pos, "expected operator or end of input, got '" + t.text + "'");
        }
        return p;
    }

private:
    Polynomial expr() {
        Polynomial p = term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Token op = lex_.take();
            Polynomial q = term();
            p = op.kind == Tok::plus ? p + q : p - q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = unary();
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            p = p * unary();
        }
        return p;
    }

    Polynomial unary() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return -unary();
        }
        if (lex_.peek().kind == Tok::plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (lex_.peek().kind == Tok::caret) {
            Token caret = lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::number)
                throw SyntaxError(e.pos, "exponent must be a nonnegative integer literal");
            unsigned long exp = std::stoul(e.text);
            (void)caret;
            return base.pow(static_cast<unsigned>(exp));
        }
        return base;
    }

    Polynomial primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::number: {
                Integer num(t.text);
                if (lex_.peek().kind == Tok::slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Tok::number)
                        throw SyntaxError(d.pos, "'/' is only allowed between integer literals");
                    Integer den(d.text);
                    if (den == 0) throw SyntaxError(d.pos, "zero denominator");
                    return Polynomial::constant(nvars_, make_rational(num, den));
                }
                return Polynomial::constant(nvars_, Rational(num));
            }
            case Tok::ident: {
                auto it = index_.find(t.text);
                if (it == index_.end()) throw UnknownVariableError(t.text, t.pos);
                Polynomial p = Polynomial::variable(nvars_, it->second);
                if (lex_.peek().kind == Tok::slash)
                    throw SyntaxError(lex_.peek().pos,
                                      "'/' is only allowed between integer literals");
                return p;
            }
            case Tok::lparen: {
                Polynomial p = expr();
                Token close = lex_.take();
                if (close.kind != Tok::rparen)
                    throw SyntaxError(close.pos, "expected ')'");
                if (lex_.peek().kind == Tok::slash)
                    throw SyntaxError(lex_.peek().pos,
                                      "'/' is only allowed between integer literals");
                return p;
            }
            default:
                throw SyntaxError(t.pos, "expected number, variable or '('");
        }
    }

    Lexer lex_;
    std::size_t nvars_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

}  // namespace toriclog

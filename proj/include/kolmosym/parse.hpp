#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "kolmosym/expoly.hpp"
#include "kolmosym/named.hpp"
#include "kolmosym/poly.hpp"
#include "kolmosym/weyl.hpp"

namespace kolmosym {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End } kind;
    std::string text;
    size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Number, s.substr(start, i - start), start});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Ident, s.substr(start, i - start), start});
        } else {
            Token::Kind k;
            switch (c) {
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                case '*': k = Token::Star; break;
                case '^': k = Token::Caret; break;
                case '(': k = Token::LParen; break;
                case ')': k = Token::RParen; break;
                case '/': k = Token::Slash; break;
                default: throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            out.push_back({k, s.substr(i, 1), i});
            ++i;
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

// Recursive-descent parser over a value algebra V supplying constants,
// identifiers and ring operations. Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' nonneg-int)?
//   primary:= number ('/' number)? | identifier | '(' expr ')'
// Product is left-associative (and may be noncommutative); '^' binds
// tightest with a non-negative integer exponent.
template <typename V, typename Algebra>
class ExprParser {
public:
    ExprParser(const std::string& text, const Algebra& alg)
        : toks_(tokenize(text)), alg_(alg) {}

    V parse() {
        V v = expr();
        expect(Token::End, "end of input");
        return v;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }
    void expect(Token::Kind k, const std::string& what) {
        if (cur().kind != k) throw ParseError("expected " + what, cur().pos);
        if (k != Token::End) advance();
    }

    V expr() {
        int sign = 1;
        if (cur().kind == Token::Plus) advance();
        else if (cur().kind == Token::Minus) {
            sign = -1;
            advance();
        }
        V v = term();
        if (sign < 0) v = alg_.negate(v);
        for (;;) {
            if (cur().kind == Token::Plus) {
                advance();
                v = alg_.add(v, term());
            } else if (cur().kind == Token::Minus) {
                advance();
                v = alg_.sub(v, term());
            } else {
                return v;
            }
        }
    }

    V term() {
        V v = factor();
        while (cur().kind == Token::Star) {
            advance();
            v = alg_.mul(v, factor());
        }
        return v;
    }

    V factor() {
        V v = primary();
        if (cur().kind == Token::Caret) {
            advance();
            if (cur().kind != Token::Number)
                throw ParseError("expected non-negative integer exponent", cur().pos);
            unsigned long e = std::stoul(cur().text);
            advance();
            v = alg_.pow(v, static_cast<unsigned>(e));
        }
        return v;
    }

    V primary() {
        if (cur().kind == Token::Number) {
            std::string num = cur().text;
            size_t pos = cur().pos;
            advance();
            if (cur().kind == Token::Slash) {
                advance();
                if (cur().kind != Token::Number)
                    throw ParseError("expected denominator", cur().pos);
                num += "/" + cur().text;
                advance();
            }
            return alg_.constant(Rational::parse(num), pos);
        }
        if (cur().kind == Token::Ident) {
            std::string name = cur().text;
            size_t pos = cur().pos;
            advance();
            return alg_.identifier(name, pos, *this);
        }
        if (cur().kind == Token::LParen) {
            advance();
            V v = expr();
            expect(Token::RParen, "')'");
            return v;
        }
        throw ParseError("expected a value", cur().pos);
    }

public:
    // for identifier handlers that need to consume "( ... )" themselves
    V parse_parenthesized() {
        expect(Token::LParen, "'('");
        V v = expr();
        expect(Token::RParen, "')'");
        return v;
    }

private:
    std::vector<Token> toks_;
    size_t i_ = 0;
    const Algebra& alg_;
};

struct WeylAlgebraOps {
    WeylElem negate(const WeylElem& a) const { return -a; }
    WeylElem add(const WeylElem& a, const WeylElem& b) const { return a + b; }
    WeylElem sub(const WeylElem& a, const WeylElem& b) const { return a - b; }
    WeylElem mul(const WeylElem& a, const WeylElem& b) const { return a * b; }
    WeylElem pow(const WeylElem& a, unsigned e) const { return a.pow(e); }
    WeylElem constant(const Rational& c, size_t) const { return WeylElem::constant(c); }
    template <typename P>
    WeylElem identifier(const std::string& name, size_t pos, P&) const {
        auto it = named::table().find(name);
        if (it == named::table().end())
            throw ParseError("unknown operator identifier '" + name + "'", pos);
        return it->second;
    }
};

struct PolyAlgebraOps {
    Poly negate(const Poly& a) const { return -a; }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly mul(const Poly& a, const Poly& b) const { return a * b; }
    Poly pow(const Poly& a, unsigned e) const { return a.pow(e); }
    Poly constant(const Rational& c, size_t) const { return Poly::constant(c); }
    template <typename P>
    Poly identifier(const std::string& name, size_t pos, P&) const {
        if (Ring::txy()->var_index(name) < 0)
            throw ParseError("unknown variable '" + name + "'", pos);
        return Poly::variable(name);
    }
};

struct ExpPolyAlgebraOps {
    ExpPoly negate(const ExpPoly& a) const { return -a; }
    ExpPoly add(const ExpPoly& a, const ExpPoly& b) const { return a + b; }
    ExpPoly sub(const ExpPoly& a, const ExpPoly& b) const { return a - b; }
    ExpPoly mul(const ExpPoly& a, const ExpPoly& b) const { return a * b; }
    ExpPoly pow(const ExpPoly& a, unsigned e) const {
        ExpPoly r = ExpPoly::one();
        for (unsigned i = 0; i < e; ++i) r *= a;
        return r;
    }
    ExpPoly constant(const Rational& c, size_t) const { return ExpPoly::constant(c); }
    template <typename P>
    ExpPoly identifier(const std::string& name, size_t pos, P& parser) const {
        if (name == "exp") {
            // the argument must be a pure polynomial
            ExpPoly arg = parser.parse_parenthesized();
            if (!arg.is_polynomial())
                throw ParseError("exp() argument must be polynomial", pos);
            return ExpPoly::exp_term(arg.polynomial_part(), Poly::constant(Rational(1)));
        }
        if (Ring::txy()->var_index(name) < 0)
            throw ParseError("unknown variable '" + name + "'", pos);
        return ExpPoly::from_poly(Poly::variable(name));
    }
};

}  // namespace detail

// Operator expression over P0 P1 P2 P3 hatPt hatD hatK C S H1 H2 Hs12 Hs14
// Ss14; result in normal form.
inline WeylElem parse_operator_expr(const std::string& text) {
    detail::WeylAlgebraOps ops;
    detail::ExprParser<WeylElem, detail::WeylAlgebraOps> p(text, ops);
    return p.parse();
}

// Polynomial in (t, x, y) with rational coefficients.
inline Poly parse_poly(const std::string& text) {
    detail::PolyAlgebraOps ops;
    detail::ExprParser<Poly, detail::PolyAlgebraOps> p(text, ops);
    return p.parse();
}

// Exp-polynomial: polynomials plus exp(<poly>) factors, e.g.
// "exp(x + t)*(3*x) + x^2 + 2*t".
inline ExpPoly parse_exppoly(const std::string& text) {
    detail::ExpPolyAlgebraOps ops;
    detail::ExprParser<ExpPoly, detail::ExpPolyAlgebraOps> p(text, ops);
    return p.parse();
}

}  // namespace kolmosym

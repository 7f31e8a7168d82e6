#ifndef FTHRESH_PARSE_HPP
#define FTHRESH_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "fthresh/polynomial.hpp"

namespace fthresh {

// Recursive-descent parser for the polynomial input grammar:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' uint)?
//   coeff  := uint | uint '/' uint        (the fraction form is Q-only)
//
// Identifiers match [A-Za-z][A-Za-z0-9_]*, whitespace is insignificant.
namespace detail {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, End } kind;
    std::string text;
    long pos;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        long pos = long(i);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            toks.push_back({Token::Int, src.substr(i, j - i), pos});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            toks.push_back({Token::Ident, src.substr(i, j - i), pos});
            i = j;
        } else {
            Token::Kind k;
            switch (c) {
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                case '*': k = Token::Star; break;
                case '^': k = Token::Caret; break;
                case '/': k = Token::Slash; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", pos);
            }
            toks.push_back({k, std::string(1, c), pos});
            ++i;
        }
    }
    toks.push_back({Token::End, "", long(src.size())});
    return toks;
}

inline BigInt parse_uint(const Token& t) {
    if (t.text.size() > 10000) throw ParseError("integer literal too long", t.pos);
    return BigInt(t.text);
}

template <class F>
class PolyParser {
public:
    PolyParser(const std::string& src, RingPtr<F> ring)
        : toks_(tokenize(src)), ring_(std::move(ring)) {}

    Polynomial<F> parse() {
        using Term = typename Polynomial<F>::Term;
        std::vector<Term> terms;
        bool negate = false;
        if (peek().kind == Token::Minus) {
            negate = true;
            advance();
        }
        terms.push_back(parse_term(negate));
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = peek().kind == Token::Minus;
            advance();
            terms.push_back(parse_term(minus));
        }
        if (peek().kind != Token::End)
            throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
        return Polynomial<F>(ring_, std::move(terms));
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    const Token& advance() { return toks_[idx_++]; }

    typename Polynomial<F>::Term parse_term(bool negate) {
        const auto& field = ring_->field;
        typename F::Elem coeff = field.one();
        Exponents mono(ring_->arity(), 0);
        bool any = false;

        if (peek().kind == Token::Int) {
            coeff = parse_coeff();
            any = true;
            while (peek().kind == Token::Star) {
                advance();
                parse_factor(mono);
            }
        } else if (peek().kind == Token::Ident) {
            parse_factor(mono);
            any = true;
            while (peek().kind == Token::Star) {
                advance();
                parse_factor(mono);
            }
        }
        if (!any)
            throw ParseError("expected coefficient or variable, got '" + peek().text + "'",
                             peek().pos);
        if (negate) coeff = field.neg(coeff);
        return {std::move(mono), std::move(coeff)};
    }

    typename F::Elem parse_coeff() {
        const Token& t = advance();
        BigInt num = parse_uint(t);
        if (peek().kind == Token::Slash) {
            long slash_pos = peek().pos;
            advance();
            if (peek().kind != Token::Int)
                throw ParseError("expected denominator after '/'", peek().pos);
            BigInt den = parse_uint(advance());
            if (den == 0) throw ParseError("zero denominator", slash_pos);
            try {
                return ring_->field.from_fraction(num, den);
            } catch (const MathError& e) {
                throw ParseError(e.what(), slash_pos);
            }
        }
        return ring_->field.from_big(num);
    }

    void parse_factor(Exponents& mono) {
        if (peek().kind != Token::Ident)
            throw ParseError("expected variable name, got '" + peek().text + "'", peek().pos);
        const Token& t = advance();
        int idx = ring_->var_index(t.text);
        if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        std::int64_t e = 1;
        if (peek().kind == Token::Caret) {
            advance();
            if (peek().kind != Token::Int)
                throw ParseError("expected integer exponent after '^'", peek().pos);
            const Token& et = advance();
            BigInt big = parse_uint(et);
            if (big > MAX_EXPONENT) throw ParseError("exponent too large", et.pos);
            e = big.convert_to<std::int64_t>();
        }
        mono[std::size_t(idx)] = checked_add(mono[std::size_t(idx)], e);
    }

    std::vector<Token> toks_;
    RingPtr<F> ring_;
    std::size_t idx_ = 0;
};

} // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const std::string& src, const RingPtr<F>& ring) {
    detail::PolyParser<F> parser(src, ring);
    return parser.parse();
}

} // namespace fthresh

#endif

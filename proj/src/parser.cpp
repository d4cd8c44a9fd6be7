#include "kr2/parser.hpp"

#include <cctype>
#include <string>

namespace kr2 {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 20;

struct Token {
    enum class Kind { Int, Var, Zeta, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::size_t offset;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t at = pos_;
        if (pos_ >= src_.size()) return {Token::Kind::End, at, "end of input"};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t begin = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return {Token::Kind::Int, at, std::string(src_.substr(begin, pos_ - begin))};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t begin = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string word(src_.substr(begin, pos_ - begin));
            if (word == "zeta") return {Token::Kind::Zeta, at, word};
            if (word.size() == 1 && var_from_name(word[0])) return {Token::Kind::Var, at, word};
            throw ParseError({at, "a variable (x, y, z, t), a number, or zeta", word});
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Kind::Plus, at, "+"};
            case '-': return {Token::Kind::Minus, at, "-"};
            case '*': return {Token::Kind::Star, at, "*"};
            case '^': return {Token::Kind::Caret, at, "^"};
            case '/': return {Token::Kind::Slash, at, "/"};
            case '(': return {Token::Kind::LParen, at, "("};
            case ')': return {Token::Kind::RParen, at, ")"};
            default: throw ParseError({at, "an operator, parenthesis, or operand", std::string(1, c)});
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view src, CycloContextPtr ctx) : lexer_(src), ctx_(std::move(ctx)) {
        advance();
    }

    MultiPoly parse() {
        MultiPoly p = expr();
        expect(Token::Kind::End, "end of input");
        return p;
    }

private:
    void advance() { current_ = lexer_.next(); }

    bool accept(Token::Kind k) {
        if (current_.kind != k) return false;
        advance();
        return true;
    }

    void expect(Token::Kind k, const std::string& what) {
        if (current_.kind != k) throw ParseError({current_.offset, what, current_.text});
        advance();
    }

    MultiPoly expr() {
        bool negate = false;
        if (accept(Token::Kind::Minus)) {
            negate = true;
        } else {
            accept(Token::Kind::Plus);
        }
        MultiPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept(Token::Kind::Plus)) {
                acc += term();
            } else if (accept(Token::Kind::Minus)) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (accept(Token::Kind::Star)) acc = acc * factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (accept(Token::Kind::Caret)) {
            Token tok = current_;
            expect(Token::Kind::Int, "a non-negative integer exponent");
            std::uint32_t k = parse_exponent(tok);
            b = b.pow(k);
        }
        return b;
    }

    MultiPoly base() {
        Token tok = current_;
        switch (tok.kind) {
            case Token::Kind::Var: {
                advance();
                return MultiPoly::variable(*var_from_name(tok.text[0]));
            }
            case Token::Kind::Int: {
                advance();
                BigInt num(tok.text);
                if (current_.kind == Token::Kind::Slash) {
                    advance();
                    Token den_tok = current_;
                    expect(Token::Kind::Int, "a denominator");
                    BigInt den(den_tok.text);
                    if (den == 0) throw ParseError({den_tok.offset, "a nonzero denominator", den_tok.text});
                    return MultiPoly::constant(Scalar(Rational(num, den)));
                }
                return MultiPoly::constant(Scalar(Rational(num)));
            }
            case Token::Kind::Zeta: {
                if (!ctx_)
                    throw ParseError({tok.offset, "zeta only with a cyclotomic context (--cyclo n)", tok.text});
                advance();
                return MultiPoly::constant(Scalar::zeta(ctx_));
            }
            case Token::Kind::LParen: {
                advance();
                MultiPoly inner = expr();
                expect(Token::Kind::RParen, "a closing parenthesis");
                return inner;
            }
            default:
                throw ParseError({tok.offset, "a factor", tok.text});
        }
    }

    std::uint32_t parse_exponent(const Token& tok) {
        std::uint64_t k = 0;
        for (char c : tok.text) {
            k = k * 10 + static_cast<std::uint64_t>(c - '0');
            if (k > kMaxExponent) throw ParseError({tok.offset, "an exponent below 2^20", tok.text});
        }
        return static_cast<std::uint32_t>(k);
    }

    Lexer lexer_;
    CycloContextPtr ctx_;
    Token current_;
};

}  // namespace

MultiPoly parse_poly(std::string_view src, const CycloContextPtr& ctx) {
    return Parser(src, ctx).parse();
}

Scalar parse_scalar(std::string_view src, const CycloContextPtr& ctx) {
    MultiPoly p = parse_poly(src, ctx);
    if (p.total_degree() > 0)
        throw ParseError({0, "a constant expression", std::string(src)});
    return p.is_zero() ? Scalar(0) : p.leading().second;
}

}  // namespace kr2

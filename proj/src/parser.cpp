#include "opal/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace opal {

namespace {

struct Token {
    enum class Kind { Ident, Integer, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t position;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Kind::End, "", start};
            return;
        }
        char c = text_[pos_];
        auto single = [&](Token::Kind kind) {
            ++pos_;
            current_ = {kind, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_ = {Token::Kind::Integer, std::string(text_.substr(start, pos_ - start)),
                        start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        switch (c) {
            case '+': single(Token::Kind::Plus); return;
            case '-': single(Token::Kind::Minus); return;
            case '*': single(Token::Kind::Star); return;
            case '/': single(Token::Kind::Slash); return;
            case '^': single(Token::Kind::Caret); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, "", 0};
};

class OperatorParser {
public:
    OperatorParser(std::string_view text, FieldSpecPtr spec, const BindingLookup& bindings)
        : lexer_(text), spec_(std::move(spec)), bindings_(bindings) {}

    OreOperator parse() {
        OreOperator value = expr();
        const Token& t = lexer_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.position);
        return value;
    }

private:
    OreOperator expr() {
        OreOperator value = term();
        for (;;) {
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::Plus) {
                lexer_.take();
                value = value + term();
            } else if (t.kind == Token::Kind::Minus) {
                lexer_.take();
                value = value - term();
            } else {
                return value;
            }
        }
    }

    OreOperator term() {
        OreOperator value = factor();
        for (;;) {
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::Star) {
                lexer_.take();
                value = value * factor();
            } else if (t.kind == Token::Kind::Slash) {
                Token slash = lexer_.take();
                OreOperator divisor = factor();
                if (divisor.is_zero())
                    throw ParseError("division by zero", slash.position);
                if (divisor.order() != 0)
                    throw ParseError("divisor must be an order-zero coefficient",
                                     slash.position);
                FieldElement c = divisor.terms().begin()->second;
                value = value * OreOperator::coefficient(c.inverse());
            } else {
                return value;
            }
        }
    }

    OreOperator factor() {
        bool negate = false;
        while (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.take();
            negate = !negate;
        }
        OreOperator value = atom();
        if (lexer_.peek().kind == Token::Kind::Caret) {
            Token caret = lexer_.take();
            Token exp = lexer_.take();
            if (exp.kind != Token::Kind::Integer)
                throw ParseError("exponent must be a nonnegative integer", caret.position);
            unsigned long n = std::stoul(exp.text);
            OreOperator power = OreOperator::one(spec_);
            for (unsigned long i = 0; i < n; ++i) power = power * value;
            value = power;
        }
        return negate ? -value : value;
    }

    OreOperator atom() {
        Token t = lexer_.take();
        switch (t.kind) {
            case Token::Kind::Integer:
                return OreOperator::coefficient(
                    FieldElement::from_rational(spec_, Rational(t.text)));
            case Token::Kind::Ident: {
                if (auto d = spec_->derivation_index(t.text))
                    return OreOperator::derivation(spec_, *d);
                if (auto s = spec_->symbol_index(t.text))
                    return OreOperator::coefficient(FieldElement::from_symbol(spec_, *s));
                if (bindings_) {
                    OreOperator bound;
                    if (bindings_(t.text, bound)) return bound.transported(spec_);
                }
                throw UnknownSymbol(t.text, t.position);
            }
            case Token::Kind::LParen: {
                OreOperator value = expr();
                Token close = lexer_.take();
                if (close.kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", close.position);
                return value;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.position);
        }
    }

    Lexer lexer_;
    FieldSpecPtr spec_;
    const BindingLookup& bindings_;
};

}  // namespace

OreOperator parse_operator(std::string_view text, const FieldSpecPtr& spec,
                           const BindingLookup& bindings) {
    return OperatorParser(text, spec, bindings).parse();
}

std::pair<Polynomial, Polynomial> parse_coefficient(std::string_view text,
                                                    const std::vector<std::string>& symbols) {
    // Coefficient expressions are operator expressions over a derivation-free
    // spec; the result is necessarily a single order-zero term.
    FieldSpecBuilder builder;
    for (const auto& name : symbols) builder.variable(name);
    FieldSpecPtr spec = builder.build();
    OreOperator value = parse_operator(text, spec);
    if (value.is_zero()) return {Polynomial(symbols.size()), Polynomial::constant(symbols.size(), 1)};
    const FieldElement& c = value.terms().begin()->second;
    return {c.num(), c.den()};
}

TermOrder parse_order(std::string_view text, const FieldSpecPtr& spec) {
    std::vector<std::size_t> precedence;
    std::size_t start = 0;
    auto trim = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };
    std::vector<bool> used(spec->num_derivations(), false);
    while (start <= text.size()) {
        std::size_t sep = text.find('>', start);
        std::string name =
            trim(std::string(text.substr(start, sep == std::string_view::npos ? sep : sep - start)));
        auto index = spec->derivation_index(name);
        if (!index) throw ParseError("unknown derivation '" + name + "' in order", start);
        if (used[*index]) throw ParseError("repeated derivation '" + name + "' in order", start);
        used[*index] = true;
        precedence.push_back(*index);
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    if (precedence.size() != spec->num_derivations())
        throw ParseError("order must list every derivation", 0);
    return TermOrder::graded_lex(std::move(precedence));
}

}  // namespace opal

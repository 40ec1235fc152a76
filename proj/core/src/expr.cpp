#include "naqm/expr.hpp"

#include "naqm/brackets.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace naqm::expr {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        switch (c) {
            case '+': tokens.push_back({TokenKind::Plus, "+", start}); ++pos; continue;
            case '-': tokens.push_back({TokenKind::Minus, "-", start}); ++pos; continue;
            case '*': tokens.push_back({TokenKind::Star, "*", start}); ++pos; continue;
            case '(': tokens.push_back({TokenKind::LParen, "(", start}); ++pos; continue;
            case ')': tokens.push_back({TokenKind::RParen, ")", start}); ++pos; continue;
            case '[': tokens.push_back({TokenKind::LBracket, "[", start}); ++pos; continue;
            case ']': tokens.push_back({TokenKind::RBracket, "]", start}); ++pos; continue;
            case ',': tokens.push_back({TokenKind::Comma, ",", start}); ++pos; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
            // Decimal literal with optional fraction and exponent.
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])) != 0)
                ++end;
            if (end < text.size() && text[end] == '.') {
                ++end;
                while (end < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[end])) != 0)
                    ++end;
            }
            if (end < text.size() && (text[end] == 'e' || text[end] == 'E')) {
                std::size_t exp_end = end + 1;
                if (exp_end < text.size() && (text[exp_end] == '+' || text[exp_end] == '-'))
                    ++exp_end;
                if (exp_end < text.size() &&
                    std::isdigit(static_cast<unsigned char>(text[exp_end])) != 0) {
                    while (exp_end < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[exp_end])) != 0)
                        ++exp_end;
                    end = exp_end;
                }
            }
            double value = 0.0;
            const auto [parse_end, ec] =
                std::from_chars(text.data() + pos, text.data() + end, value);
            if (ec != std::errc{} || parse_end != text.data() + end)
                throw LexError(start, "malformed number literal '" +
                                          std::string(text.substr(pos, end - pos)) + "'");
            Token t{TokenKind::Number, std::string(text.substr(pos, end - pos)), start};
            t.value = value;
            tokens.push_back(std::move(t));
            pos = end;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            std::size_t end = pos;
            while (end < text.size() && is_word_char(text[end])) ++end;
            const std::string_view word = text.substr(pos, end - pos);
            if (word == "I") {
                tokens.push_back({TokenKind::ImagUnit, "I", start});
            } else if (BasisUnit unit{}; algebra::parse_unit_token(word, unit)) {
                Token t{TokenKind::Basis, std::string(word), start};
                t.unit = unit;
                tokens.push_back(std::move(t));
            } else if (word == "comm" || word == "assoc") {
                tokens.push_back({TokenKind::Ident, std::string(word), start});
            } else {
                throw LexError(start, "unknown symbol '" + std::string(word) + "'");
            }
            pos = end;
            continue;
        }
        throw LexError(start, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({TokenKind::End, "", text.size()});
    return tokens;
}

namespace {

class Parser {
  public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    ParseResult run() {
        ParseResult result;
        result.expr = additive(result.notes);
        expect(TokenKind::End, "end of input");
        return result;
    }

  private:
    std::span<const Token> tokens_;
    std::size_t index_ = 0;

    [[nodiscard]] const Token& peek() const { return tokens_[index_]; }

    const Token& advance() { return tokens_[index_++]; }

    bool match(TokenKind kind) {
        if (peek().kind != kind) return false;
        ++index_;
        return true;
    }

    void expect(TokenKind kind, std::string_view what) {
        if (!match(kind))
            throw ParseError(peek().position, "expected " + std::string(what) + ", found " +
                                                  describe(peek()));
    }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::End) return "end of input";
        return "'" + t.lexeme + "'";
    }

    ExprPtr additive(std::vector<std::string>& notes) {
        ExprPtr lhs = multiplicative(notes);
        while (true) {
            if (match(TokenKind::Plus)) {
                ExprPtr rhs = multiplicative(notes);
                lhs = std::make_unique<Expr>(Expr{Add{std::move(lhs), std::move(rhs)}});
            } else if (match(TokenKind::Minus)) {
                ExprPtr rhs = multiplicative(notes);
                lhs = std::make_unique<Expr>(Expr{Sub{std::move(lhs), std::move(rhs)}});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr multiplicative(std::vector<std::string>& notes) {
        ExprPtr lhs = unary(notes);
        std::size_t stars = 0;
        std::size_t chain_position = 0;
        while (peek().kind == TokenKind::Star) {
            const std::size_t star_position = advance().position;
            if (stars == 0) chain_position = star_position;
            ++stars;
            ExprPtr rhs = unary(notes);
            lhs = std::make_unique<Expr>(Expr{Mul{std::move(lhs), std::move(rhs)}});
        }
        if (stars >= 2) {
            notes.push_back(
                "note: '*' chain at offset " + std::to_string(chain_position) +
                " groups left to right; products here are order-sensitive, so parenthesize to "
                "pick a different grouping");
        }
        return lhs;
    }

    ExprPtr unary(std::vector<std::string>& notes) {
        if (match(TokenKind::Minus))
            return std::make_unique<Expr>(Expr{Neg{unary(notes)}});
        return primary(notes);
    }

    ExprPtr primary(std::vector<std::string>& notes) {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Number: {
                advance();
                // A number directly followed by I is an imaginary literal.
                if (match(TokenKind::ImagUnit))
                    return std::make_unique<Expr>(Expr{ScalarLit{Complex{0.0, t.value}}});
                return std::make_unique<Expr>(Expr{ScalarLit{Complex{t.value, 0.0}}});
            }
            case TokenKind::ImagUnit:
                advance();
                return std::make_unique<Expr>(Expr{ScalarLit{Complex{0.0, 1.0}}});
            case TokenKind::Basis:
                advance();
                return std::make_unique<Expr>(Expr{Basis{t.unit}});
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = additive(notes);
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            case TokenKind::LBracket: {
                advance();
                ExprPtr a = additive(notes);
                expect(TokenKind::Comma, "','");
                ExprPtr b = additive(notes);
                expect(TokenKind::Comma, "','");
                ExprPtr c = additive(notes);
                expect(TokenKind::RBracket, "']'");
                return std::make_unique<Expr>(
                    Expr{Bracket3{std::move(a), std::move(b), std::move(c)}});
            }
            case TokenKind::Ident: {
                advance();
                const std::size_t arity = t.lexeme == "comm" ? 2 : 3;
                expect(TokenKind::LParen, "'('");
                std::vector<ExprPtr> args;
                args.push_back(additive(notes));
                while (match(TokenKind::Comma)) args.push_back(additive(notes));
                expect(TokenKind::RParen, "')'");
                if (args.size() != arity)
                    throw ParseError(t.position, t.lexeme + " takes " + std::to_string(arity) +
                                                     " arguments, got " +
                                                     std::to_string(args.size()));
                return std::make_unique<Expr>(Expr{Call{t.lexeme, std::move(args)}});
            }
            default:
                throw ParseError(t.position,
                                 "expected a primary expression (number, I, basis unit, '(', "
                                 "'[', comm, assoc), found " +
                                     describe(t));
        }
    }
};

}  // namespace

ParseResult parse(std::span<const Token> tokens) { return Parser{tokens}.run(); }

ParseResult parse(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    return parse(std::span<const Token>{tokens});
}

namespace {

struct Evaluator {
    AlgebraElement operator()(const ScalarLit& n) const { return AlgebraElement::scalar(n.value); }
    AlgebraElement operator()(const Basis& n) const { return AlgebraElement::unit(n.unit); }
    AlgebraElement operator()(const Neg& n) const { return -evaluate(*n.operand); }
    AlgebraElement operator()(const Add& n) const { return evaluate(*n.lhs) + evaluate(*n.rhs); }
    AlgebraElement operator()(const Sub& n) const { return evaluate(*n.lhs) - evaluate(*n.rhs); }
    AlgebraElement operator()(const Mul& n) const { return evaluate(*n.lhs) * evaluate(*n.rhs); }
    AlgebraElement operator()(const Bracket3& n) const {
        return brackets::na_bracket(evaluate(*n.a), evaluate(*n.b), evaluate(*n.c));
    }
    AlgebraElement operator()(const Call& n) const {
        if (n.name == "comm") return brackets::commutator(evaluate(*n.args[0]), evaluate(*n.args[1]));
        return brackets::associator(evaluate(*n.args[0]), evaluate(*n.args[1]),
                                    evaluate(*n.args[2]));
    }
};

}  // namespace

AlgebraElement evaluate(const Expr& e) {
    const AlgebraElement result = std::visit(Evaluator{}, e.node);
    if (!algebra::all_finite(result))
        throw EvalError("coefficient overflow while evaluating expression");
    return result;
}

std::string format_element(const AlgebraElement& x) { return algebra::to_string(x); }

}  // namespace naqm::expr

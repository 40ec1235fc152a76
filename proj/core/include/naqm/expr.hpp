#pragma once

// A small expression language over the algebra: sums, differences and
// explicit products of scalars and basis units, the ternary bracket
// [a,b,c], and the calls comm(a,b) / assoc(a,b,c). Multiplication requires
// an explicit '*' and associates to the left; chained products trigger a
// grouping note because reassociation changes values in this algebra.
//
// Grammar (precedence low to high):
//   expr        := additive
//   additive    := multiplicative (('+' | '-') multiplicative)*
//   multiplicative := unary ('*' unary)*
//   unary       := '-' unary | primary
//   primary     := NUMBER ['I'] | 'I' | BASIS | '(' expr ')'
//                | '[' expr ',' expr ',' expr ']' | IDENT '(' args ')'
// Basis tokens are i0..i7 and e1..e7; a bare 1 is a scalar literal.

#include "naqm/algebra.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace naqm::expr {

using algebra::AlgebraElement;
using algebra::BasisUnit;
using algebra::Complex;

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

enum class TokenKind {
    Number,
    ImagUnit,   ///< the scalar imaginary unit 'I'
    Basis,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Ident,
    End,        ///< sentinel appended by tokenize
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position = 0;         ///< byte offset into the input
    double value = 0.0;               ///< Number payload
    BasisUnit unit = BasisUnit::One;  ///< Basis payload
};

class LexError : public std::runtime_error {
  public:
    LexError(std::size_t position, std::string message)
        : std::runtime_error(std::move(message)), position_(position) {}
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t position, std::string message)
        : std::runtime_error(std::move(message)), position_(position) {}
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

class EvalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Whitespace-insensitive longest-match lexer; the returned vector ends
/// with an End sentinel. Unknown characters or unknown words raise
/// LexError with the byte offset.
std::vector<Token> tokenize(std::string_view text);

// ---------------------------------------------------------------------------
// Syntax tree
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct ScalarLit {
    Complex value;
};
struct Basis {
    BasisUnit unit;
};
struct Neg {
    ExprPtr operand;
};
struct Add {
    ExprPtr lhs, rhs;
};
struct Sub {
    ExprPtr lhs, rhs;
};
struct Mul {
    ExprPtr lhs, rhs;
};
struct Bracket3 {
    ExprPtr a, b, c;
};
struct Call {
    std::string name;  ///< "comm" or "assoc"
    std::vector<ExprPtr> args;
};

struct Expr {
    std::variant<ScalarLit, Basis, Neg, Add, Sub, Mul, Bracket3, Call> node;
};

struct ParseResult {
    ExprPtr expr;
    std::vector<std::string> notes;  ///< grouping reminders for '*' chains
};

/// Recursive-descent parse of a full token stream (trailing tokens are an
/// error). Throws ParseError with the byte offset and the expected set.
ParseResult parse(std::span<const Token> tokens);

/// Convenience: tokenize + parse.
ParseResult parse(std::string_view text);

/// Recursive evaluation over the algebra; throws EvalError if a
/// coefficient overflows the representable range.
AlgebraElement evaluate(const Expr& e);

/// Canonical text form of an element; output re-parses to the same value.
std::string format_element(const AlgebraElement& x);

}  // namespace naqm::expr

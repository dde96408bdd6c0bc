#pragma once

#include "binomid/expr.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binomid {

enum class TokenKind { Ident, Integer, Operator, Punct, Keyword, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string lexeme;
    unsigned line = 1;
    unsigned column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, unsigned line, unsigned column);
    unsigned line() const { return line_; }
    unsigned column() const { return column_; }

private:
    unsigned line_;
    unsigned column_;
};

// Splits input into tokens; whitespace and '#' line comments are skipped.
// Keywords: identity, params, vars, lhs, rhs, sum. Operators: + - * / ^ = >=
// and the range dots "..". Punctuation: ( ) , . The stream ends with a single
// End token. Positions are 1-based.
std::vector<Token> tokenize(std::string_view text);

// Parses one expression covering the whole token stream. The identifiers x
// and y are the indeterminates; every other identifier becomes a parameter
// reference. Precedence, loosest first: + -, * /, ^ (right-associative),
// prefix minus, so -x^2 parses as (-x)^2.
ExprPtr parse_expr(const std::vector<Token>& tokens);
ExprPtr parse_expr(std::string_view text);

// Parses a sequence of identity declarations:
//
//   identity <name>
//   params <p> >= <int>, ...     # may be empty
//   vars [x] [y]
//   lhs <expr>
//   rhs <expr>
//
// Every referenced parameter must be declared (sum indices shadow parameters
// inside the sum body), every used indeterminate must be listed under vars,
// and names must be unique within the file.
std::vector<Identity> parse_identity_file(std::string_view text);

} // namespace binomid

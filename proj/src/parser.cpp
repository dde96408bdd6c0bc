#include "binomid/parser.hpp"

#include "binomid/exact.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace binomid {

ParseError::ParseError(const std::string& message, unsigned line, unsigned column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool is_keyword(const std::string& word) {
    static const std::set<std::string> keywords{"identity", "params", "vars", "lhs", "rhs", "sum"};
    return keywords.count(word) != 0;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    unsigned line = 1;
    unsigned column = 1;
    std::size_t i = 0;
    const auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance();
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance();
            continue;
        }
        const unsigned tok_line = line;
        const unsigned tok_column = column;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lexeme;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                lexeme += text[i];
                advance();
            }
            tokens.push_back({TokenKind::Integer, std::move(lexeme), tok_line, tok_column});
            continue;
        }
        if (is_ident_start(c)) {
            std::string lexeme;
            while (i < text.size() && is_ident_char(text[i])) {
                lexeme += text[i];
                advance();
            }
            const TokenKind kind = is_keyword(lexeme) ? TokenKind::Keyword : TokenKind::Ident;
            tokens.push_back({kind, std::move(lexeme), tok_line, tok_column});
            continue;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '=') {
            tokens.push_back({TokenKind::Operator, std::string(1, c), tok_line, tok_column});
            advance();
            continue;
        }
        if (c == '>') {
            if (i + 1 < text.size() && text[i + 1] == '=') {
                tokens.push_back({TokenKind::Operator, ">=", tok_line, tok_column});
                advance();
                advance();
                continue;
            }
            throw ParseError("unexpected character '>'", tok_line, tok_column);
        }
        if (c == '.') {
            if (i + 1 < text.size() && text[i + 1] == '.') {
                tokens.push_back({TokenKind::Operator, "..", tok_line, tok_column});
                advance();
                advance();
                continue;
            }
            throw ParseError("unexpected character '.'", tok_line, tok_column);
        }
        if (c == '(' || c == ')' || c == ',') {
            tokens.push_back({TokenKind::Punct, std::string(1, c), tok_line, tok_column});
            advance();
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", tok_line, tok_column);
    }
    tokens.push_back({TokenKind::End, "", line, column});
    return tokens;
}

namespace {

std::string describe(const Token& t) {
    if (t.kind == TokenKind::End) return "end of input";
    return "'" + t.lexeme + "'";
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    // Whole-stream expression entry point used by parse_expr: identifiers are
    // not checked against any declaration list.
    ExprPtr parse_whole_expression() {
        ExprPtr e = parse_expression();
        expect_end();
        return e;
    }

    std::vector<Identity> parse_file() {
        checked_ = true;
        std::vector<Identity> out;
        std::set<std::string> names;
        while (peek().kind != TokenKind::End) {
            Identity id = parse_identity_decl();
            if (!names.insert(id.name).second) {
                throw ParseError("duplicate identity name '" + id.name + "'", decl_line_,
                                 decl_column_);
            }
            out.push_back(std::move(id));
        }
        return out;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t at = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[at];
    }

    const Token& next() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }

    bool is_op(const char* lexeme) const {
        return peek().kind == TokenKind::Operator && peek().lexeme == lexeme;
    }

    bool is_punct(const char* lexeme) const {
        return peek().kind == TokenKind::Punct && peek().lexeme == lexeme;
    }

    void expect_op(const char* lexeme) {
        if (!is_op(lexeme)) {
            throw ParseError("expected '" + std::string(lexeme) + "', found " + describe(peek()),
                             peek().line, peek().column);
        }
        next();
    }

    void expect_punct(const char* lexeme) {
        if (!is_punct(lexeme)) {
            throw ParseError("expected '" + std::string(lexeme) + "', found " + describe(peek()),
                             peek().line, peek().column);
        }
        next();
    }

    void expect_keyword(const char* word) {
        if (peek().kind != TokenKind::Keyword || peek().lexeme != word) {
            throw ParseError("expected '" + std::string(word) + "', found " + describe(peek()),
                             peek().line, peek().column);
        }
        next();
    }

    Token expect_ident(const char* what) {
        if (peek().kind != TokenKind::Ident) {
            throw ParseError("expected " + std::string(what) + ", found " + describe(peek()),
                             peek().line, peek().column);
        }
        return next();
    }

    void expect_end() {
        if (peek().kind != TokenKind::End) {
            throw ParseError("unexpected token " + describe(peek()), peek().line, peek().column);
        }
    }

    ExprPtr parse_expression() { return parse_add(); }

    ExprPtr parse_add() {
        ExprPtr lhs = parse_mul();
        while (is_op("+") || is_op("-")) {
            const bool plus = peek().lexeme == "+";
            next();
            ExprPtr rhs = parse_mul();
            lhs = plus ? add(std::move(lhs), std::move(rhs)) : sub(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parse_mul() {
        ExprPtr lhs = parse_pow();
        while (is_op("*") || is_op("/")) {
            const bool times = peek().lexeme == "*";
            next();
            ExprPtr rhs = parse_pow();
            lhs = times ? mul(std::move(lhs), std::move(rhs)) : frac(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parse_pow() {
        ExprPtr base = parse_prefix();
        if (is_op("^")) {
            next();
            return power(std::move(base), parse_pow());
        }
        return base;
    }

    ExprPtr parse_prefix() {
        if (is_op("-")) {
            next();
            return neg(parse_prefix());
        }
        return parse_atom();
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == TokenKind::Integer) {
            next();
            return lit(parse_bigint(t.lexeme));
        }
        if (t.kind == TokenKind::Punct && t.lexeme == "(") {
            next();
            ExprPtr inner = parse_expression();
            expect_punct(")");
            return inner;
        }
        if (t.kind == TokenKind::Keyword && t.lexeme == "sum") return parse_sum();
        if (t.kind == TokenKind::Ident) {
            if (t.lexeme == "binom" && peek(1).kind == TokenKind::Punct && peek(1).lexeme == "(") {
                return parse_binom();
            }
            next();
            if (t.lexeme == "x" || t.lexeme == "y") {
                const Var v = t.lexeme == "x" ? Var::X : Var::Y;
                if (checked_ && !(v == Var::X ? allow_x_ : allow_y_)) {
                    throw ParseError("identity does not declare variable " + t.lexeme, t.line,
                                     t.column);
                }
                return v == Var::X ? var_x() : var_y();
            }
            if (checked_ && !is_in_scope(t.lexeme)) {
                throw ParseError("undeclared parameter '" + t.lexeme + "'", t.line, t.column);
            }
            return param(t.lexeme);
        }
        throw ParseError("unexpected token " + describe(t), t.line, t.column);
    }

    ExprPtr parse_binom() {
        next();
        expect_punct("(");
        ExprPtr upper = parse_expression();
        expect_punct(",");
        ExprPtr lower = parse_expression();
        expect_punct(")");
        return binom(std::move(upper), std::move(lower));
    }

    ExprPtr parse_sum() {
        next();
        expect_punct("(");
        const Token index = expect_ident("sum index");
        if (index.lexeme == "x" || index.lexeme == "y") {
            throw ParseError("sum index must not be named " + index.lexeme, index.line,
                             index.column);
        }
        expect_op("=");
        ExprPtr lo = parse_expression();
        expect_op("..");
        ExprPtr hi = parse_expression();
        expect_punct(",");
        bound_.push_back(index.lexeme);
        ExprPtr body = parse_expression();
        bound_.pop_back();
        expect_punct(")");
        return sum(index.lexeme, std::move(lo), std::move(hi), std::move(body));
    }

    bool is_in_scope(const std::string& name) const {
        if (std::find(bound_.begin(), bound_.end(), name) != bound_.end()) return true;
        return declared_.count(name) != 0;
    }

    Identity parse_identity_decl() {
        decl_line_ = peek().line;
        decl_column_ = peek().column;
        expect_keyword("identity");
        const Token name = expect_ident("identity name");
        decl_line_ = name.line;
        decl_column_ = name.column;

        expect_keyword("params");
        std::vector<ParamDecl> params;
        declared_.clear();
        if (peek().kind == TokenKind::Ident) {
            while (true) {
                const Token p = expect_ident("parameter name");
                if (p.lexeme == "x" || p.lexeme == "y") {
                    throw ParseError("'" + p.lexeme + "' is reserved for an indeterminate", p.line,
                                     p.column);
                }
                if (!declared_.insert(p.lexeme).second) {
                    throw ParseError("duplicate parameter '" + p.lexeme + "'", p.line, p.column);
                }
                expect_op(">=");
                bool negative = false;
                if (is_op("-")) {
                    next();
                    negative = true;
                }
                const Token& bound = peek();
                if (bound.kind != TokenKind::Integer) {
                    throw ParseError("expected integer bound, found " + describe(bound), bound.line,
                                     bound.column);
                }
                next();
                BigInt min_value = parse_bigint(bound.lexeme);
                if (negative) min_value = -min_value;
                params.push_back({p.lexeme, std::move(min_value)});
                if (is_punct(",")) {
                    next();
                    continue;
                }
                break;
            }
        }

        expect_keyword("vars");
        allow_x_ = false;
        allow_y_ = false;
        while (peek().kind == TokenKind::Ident) {
            const Token& v = peek();
            if (v.lexeme == "x") {
                if (allow_x_) throw ParseError("duplicate variable x", v.line, v.column);
                allow_x_ = true;
            } else if (v.lexeme == "y") {
                if (allow_y_) throw ParseError("duplicate variable y", v.line, v.column);
                allow_y_ = true;
            } else {
                throw ParseError("unknown variable '" + v.lexeme + "'", v.line, v.column);
            }
            next();
        }

        expect_keyword("lhs");
        ExprPtr lhs = parse_expression();
        expect_keyword("rhs");
        ExprPtr rhs = parse_expression();

        Identity id;
        id.name = name.lexeme;
        id.params = std::move(params);
        id.uses_x = allow_x_;
        id.uses_y = allow_y_;
        id.lhs = std::move(lhs);
        id.rhs = std::move(rhs);
        validate(id);
        return id;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
    bool checked_ = false;
    std::set<std::string> declared_;
    std::vector<std::string> bound_;
    bool allow_x_ = false;
    bool allow_y_ = false;
    unsigned decl_line_ = 1;
    unsigned decl_column_ = 1;
};

} // namespace

ExprPtr parse_expr(const std::vector<Token>& tokens) {
    Parser parser(tokens);
    return parser.parse_whole_expression();
}

ExprPtr parse_expr(std::string_view text) { return parse_expr(tokenize(text)); }

std::vector<Identity> parse_identity_file(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    Parser parser(tokens);
    return parser.parse_file();
}

} // namespace binomid

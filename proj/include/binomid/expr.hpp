#pragma once

#include "binomid/exact.hpp"
#include "binomid/polynomial.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace binomid {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
    BigInt value;
};
struct ParamRef {
    std::string name;
};
struct VarRef {
    Var var;
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
struct Div {
    ExprPtr numerator, denominator;
};
struct Pow {
    ExprPtr base, exponent;
};
struct Binom {
    ExprPtr upper, lower;
};
struct Sum {
    std::string index;
    ExprPtr lo, hi, body;
};

// Immutable expression tree; nodes are shared, never mutated.
class Expr {
public:
    using Node = std::variant<IntLit, ParamRef, VarRef, Neg, Add, Sub, Mul, Div, Pow, Binom, Sum>;

    explicit Expr(Node node) : node_(std::move(node)) {}
    const Node& node() const { return node_; }

private:
    Node node_;
};

ExprPtr lit(long value);
ExprPtr lit(BigInt value);
ExprPtr param(std::string name);
ExprPtr var_x();
ExprPtr var_y();
ExprPtr neg(ExprPtr operand);
ExprPtr add(ExprPtr lhs, ExprPtr rhs);
ExprPtr sub(ExprPtr lhs, ExprPtr rhs);
ExprPtr mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr frac(ExprPtr numerator, ExprPtr denominator);
ExprPtr power(ExprPtr base, ExprPtr exponent);
ExprPtr binom(ExprPtr upper, ExprPtr lower);
ExprPtr sum(std::string index, ExprPtr lo, ExprPtr hi, ExprPtr body);

bool structurally_equal(const Expr& a, const Expr& b);
inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    return structurally_equal(*a, *b);
}

// Free parameters (sum indices excluded) and indeterminate usage of an expression.
struct UsageInfo {
    std::set<std::string> params;
    bool uses_x = false;
    bool uses_y = false;
};
UsageInfo analyze_usage(const Expr& e);

// Infix construction helpers for building expressions in source code.
namespace dsl {

inline ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return add(a, b); }
inline ExprPtr operator+(const ExprPtr& a, long b) { return add(a, lit(b)); }
inline ExprPtr operator+(long a, const ExprPtr& b) { return add(lit(a), b); }
inline ExprPtr operator-(const ExprPtr& a, const ExprPtr& b) { return sub(a, b); }
inline ExprPtr operator-(const ExprPtr& a, long b) { return sub(a, lit(b)); }
inline ExprPtr operator-(long a, const ExprPtr& b) { return sub(lit(a), b); }
inline ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) { return mul(a, b); }
inline ExprPtr operator*(long a, const ExprPtr& b) { return mul(lit(a), b); }
inline ExprPtr operator-(const ExprPtr& a) { return neg(a); }

} // namespace dsl

// Parameter declaration: name plus its lower domain bound (name >= min_value).
struct ParamDecl {
    std::string name;
    BigInt min_value;
};

// A named pair of expression sides with its parameter and indeterminate
// declarations.
struct Identity {
    std::string name;
    std::vector<ParamDecl> params;
    bool uses_x = false;
    bool uses_y = false;
    ExprPtr lhs, rhs;
};

using Binding = std::map<std::string, BigInt>;

// Checks declaration consistency: every free parameter declared, every
// indeterminate used is declared, no duplicate parameter names.
// Throws std::invalid_argument on violation.
void validate(const Identity& identity);

bool satisfies_domains(const Identity& identity, const Binding& binding);

} // namespace binomid

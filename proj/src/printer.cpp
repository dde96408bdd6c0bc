#include "binomid/printer.hpp"

#include "binomid/exact.hpp"

#include <type_traits>
#include <variant>

namespace binomid {

namespace {

// Binding strength: additive 1, multiplicative 2, power 3, prefix minus 4,
// atoms 5. Prefix minus binds tighter than '^', so -x^2 means (-x)^2.
int precedence(const Expr& e) {
    return std::visit(
        [](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub>) {
                return 1;
            } else if constexpr (std::is_same_v<T, Mul> || std::is_same_v<T, Div>) {
                return 2;
            } else if constexpr (std::is_same_v<T, Pow>) {
                return 3;
            } else if constexpr (std::is_same_v<T, Neg>) {
                return 4;
            } else {
                return 5;
            }
        },
        e.node());
}

void print_into(const Expr& e, std::string& out);

// Parenthesize children that bind looser than their context requires.
void print_child(const Expr& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += '(';
        print_into(child, out);
        out += ')';
    } else {
        print_into(child, out);
    }
}

void print_into(const Expr& e, std::string& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                out += to_string(node.value);
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                out += node.name;
            } else if constexpr (std::is_same_v<T, VarRef>) {
                out += node.var == Var::X ? 'x' : 'y';
            } else if constexpr (std::is_same_v<T, Neg>) {
                out += '-';
                print_child(*node.operand, 4, out);
            } else if constexpr (std::is_same_v<T, Add>) {
                print_child(*node.lhs, 1, out);
                out += " + ";
                print_child(*node.rhs, 2, out);
            } else if constexpr (std::is_same_v<T, Sub>) {
                print_child(*node.lhs, 1, out);
                out += " - ";
                print_child(*node.rhs, 2, out);
            } else if constexpr (std::is_same_v<T, Mul>) {
                print_child(*node.lhs, 2, out);
                out += '*';
                print_child(*node.rhs, 3, out);
            } else if constexpr (std::is_same_v<T, Div>) {
                print_child(*node.numerator, 2, out);
                out += '/';
                print_child(*node.denominator, 3, out);
            } else if constexpr (std::is_same_v<T, Pow>) {
                print_child(*node.base, 4, out);
                out += '^';
                print_child(*node.exponent, 3, out);
            } else if constexpr (std::is_same_v<T, Binom>) {
                out += "binom(";
                print_into(*node.upper, out);
                out += ", ";
                print_into(*node.lower, out);
                out += ')';
            } else {
                static_assert(std::is_same_v<T, Sum>);
                out += "sum(";
                out += node.index;
                out += " = ";
                print_into(*node.lo, out);
                out += " .. ";
                print_into(*node.hi, out);
                out += ", ";
                print_into(*node.body, out);
                out += ')';
            }
        },
        e.node());
}

} // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_into(e, out);
    return out;
}

std::string print_identity(const Identity& id) {
    std::string out = "identity " + id.name + "\n";
    out += "params";
    bool first = true;
    for (const ParamDecl& p : id.params) {
        out += first ? " " : ", ";
        first = false;
        out += p.name + " >= " + to_string(p.min_value);
    }
    out += "\nvars";
    if (id.uses_x) out += " x";
    if (id.uses_y) out += " y";
    out += "\nlhs " + print_expr(*id.lhs);
    out += "\nrhs " + print_expr(*id.rhs);
    out += "\n";
    return out;
}

std::string print_identity_file(const std::vector<Identity>& ids) {
    std::string out;
    for (const Identity& id : ids) {
        if (!out.empty()) out += "\n";
        out += print_identity(id);
    }
    return out;
}

} // namespace binomid

#include "binomid/expr.hpp"

namespace binomid {

namespace {
ExprPtr make(Expr::Node node) { return std::make_shared<Expr>(std::move(node)); }
} // namespace

ExprPtr lit(long value) { return make(IntLit{BigInt(value)}); }
ExprPtr lit(BigInt value) { return make(IntLit{std::move(value)}); }
ExprPtr param(std::string name) { return make(ParamRef{std::move(name)}); }
ExprPtr var_x() { return make(VarRef{Var::X}); }
ExprPtr var_y() { return make(VarRef{Var::Y}); }
ExprPtr neg(ExprPtr operand) { return make(Neg{std::move(operand)}); }
ExprPtr add(ExprPtr lhs, ExprPtr rhs) { return make(Add{std::move(lhs), std::move(rhs)}); }
ExprPtr sub(ExprPtr lhs, ExprPtr rhs) { return make(Sub{std::move(lhs), std::move(rhs)}); }
ExprPtr mul(ExprPtr lhs, ExprPtr rhs) { return make(Mul{std::move(lhs), std::move(rhs)}); }
ExprPtr frac(ExprPtr numerator, ExprPtr denominator) {
    return make(Div{std::move(numerator), std::move(denominator)});
}
ExprPtr power(ExprPtr base, ExprPtr exponent) {
    return make(Pow{std::move(base), std::move(exponent)});
}
ExprPtr binom(ExprPtr upper, ExprPtr lower) {
    return make(Binom{std::move(upper), std::move(lower)});
}
ExprPtr sum(std::string index, ExprPtr lo, ExprPtr hi, ExprPtr body) {
    return make(Sum{std::move(index), std::move(lo), std::move(hi), std::move(body)});
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node().index() != b.node().index())
        return false;
    return std::visit(
        [&b](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node());
            if constexpr (std::is_same_v<T, IntLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                return na.name == nb.name;
            } else if constexpr (std::is_same_v<T, VarRef>) {
                return na.var == nb.var;
            } else if constexpr (std::is_same_v<T, Neg>) {
                return structurally_equal(*na.operand, *nb.operand);
            } else if constexpr (std::is_same_v<T, Div>) {
                return structurally_equal(*na.numerator, *nb.numerator) &&
                       structurally_equal(*na.denominator, *nb.denominator);
            } else if constexpr (std::is_same_v<T, Pow>) {
                return structurally_equal(*na.base, *nb.base) &&
                       structurally_equal(*na.exponent, *nb.exponent);
            } else if constexpr (std::is_same_v<T, Binom>) {
                return structurally_equal(*na.upper, *nb.upper) &&
                       structurally_equal(*na.lower, *nb.lower);
            } else if constexpr (std::is_same_v<T, Sum>) {
                return na.index == nb.index && structurally_equal(*na.lo, *nb.lo) &&
                       structurally_equal(*na.hi, *nb.hi) && structurally_equal(*na.body, *nb.body);
            } else {
                return structurally_equal(*na.lhs, *nb.lhs) && structurally_equal(*na.rhs, *nb.rhs);
            }
        },
        a.node());
}

namespace {

void collect_usage(const Expr& e, std::set<std::string>& bound, UsageInfo& info) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntLit>) {
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                if (!bound.contains(node.name))
                    info.params.insert(node.name);
            } else if constexpr (std::is_same_v<T, VarRef>) {
                (node.var == Var::X ? info.uses_x : info.uses_y) = true;
            } else if constexpr (std::is_same_v<T, Neg>) {
                collect_usage(*node.operand, bound, info);
            } else if constexpr (std::is_same_v<T, Div>) {
                collect_usage(*node.numerator, bound, info);
                collect_usage(*node.denominator, bound, info);
            } else if constexpr (std::is_same_v<T, Pow>) {
                collect_usage(*node.base, bound, info);
                collect_usage(*node.exponent, bound, info);
            } else if constexpr (std::is_same_v<T, Binom>) {
                collect_usage(*node.upper, bound, info);
                collect_usage(*node.lower, bound, info);
            } else if constexpr (std::is_same_v<T, Sum>) {
                collect_usage(*node.lo, bound, info);
                collect_usage(*node.hi, bound, info);
                const bool already = bound.contains(node.index);
                bound.insert(node.index);
                collect_usage(*node.body, bound, info);
                if (!already)
                    bound.erase(node.index);
            } else {
                collect_usage(*node.lhs, bound, info);
                collect_usage(*node.rhs, bound, info);
            }
        },
        e.node());
}

} // namespace

UsageInfo analyze_usage(const Expr& e) {
    UsageInfo info;
    std::set<std::string> bound;
    collect_usage(e, bound, info);
    return info;
}

void validate(const Identity& identity) {
    if (!identity.lhs || !identity.rhs)
        throw std::invalid_argument("identity '" + identity.name + "' is missing a side");
    std::set<std::string> declared;
    for (const auto& p : identity.params)
        if (!declared.insert(p.name).second)
            throw std::invalid_argument("identity '" + identity.name +
                                        "' declares parameter '" + p.name + "' twice");
    UsageInfo usage = analyze_usage(*identity.lhs);
    const UsageInfo rhs_usage = analyze_usage(*identity.rhs);
    usage.params.insert(rhs_usage.params.begin(), rhs_usage.params.end());
    usage.uses_x = usage.uses_x || rhs_usage.uses_x;
    usage.uses_y = usage.uses_y || rhs_usage.uses_y;
    for (const auto& name : usage.params)
        if (!declared.contains(name))
            throw std::invalid_argument("identity '" + identity.name +
                                        "' uses undeclared parameter '" + name + "'");
    if (usage.uses_x && !identity.uses_x)
        throw std::invalid_argument("identity '" + identity.name +
                                    "' uses x without declaring it");
    if (usage.uses_y && !identity.uses_y)
        throw std::invalid_argument("identity '" + identity.name +
                                    "' uses y without declaring it");
}

bool satisfies_domains(const Identity& identity, const Binding& binding) {
    for (const auto& p : identity.params) {
        const auto it = binding.find(p.name);
        if (it == binding.end() || it->second < p.min_value)
            return false;
    }
    return true;
}

} // namespace binomid

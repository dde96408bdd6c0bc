#include "binomid/engine.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <thread>

namespace binomid {

namespace {

// Resource guards; generous for every supported workload, they only stop
// pathological inputs from hanging the process.
constexpr long kExponentLimit = 1'000'000;
constexpr long kDegreeLimit = 100'000'000;
constexpr long kSumSpanLimit = 1'000'000;
const BigInt kMaxBindings(1'000'000);
const BigInt kMaxGridPoints(10'000'000);

long guard_degree(long bound) {
    if (bound > kDegreeLimit)
        throw ElaborateError("degree bound exceeds " + std::to_string(kDegreeLimit));
    return bound;
}

BigInt require_const_integer(const Expr& e, const Env& env, const char* what) {
    const auto value = elaborate(e, env).constant_value();
    if (!value)
        throw ElaborateError(std::string(what) + " is not constant");
    if (!is_integer(*value))
        throw ElaborateError(std::string(what) + " is not an integer: " + to_string(*value));
    return rat_numerator(*value);
}

unsigned long require_small_nonneg(const BigInt& k, const char* what) {
    if (k < 0)
        throw ElaborateError(std::string(what) + " is negative: " + to_string(k));
    if (k > kExponentLimit)
        throw ElaborateError(std::string(what) + " exceeds " + std::to_string(kExponentLimit));
    return static_cast<unsigned long>(to_long_checked(k, what));
}

void check_sum_span(const BigInt& lo, const BigInt& hi) {
    if (hi - lo + 1 > kSumSpanLimit)
        throw ElaborateError("sum over more than " + std::to_string(kSumSpanLimit) + " terms");
}

Rational checked_denominator(const Expr& den, const Env& env) {
    const auto value = elaborate(den, env).constant_value();
    if (!value)
        throw ElaborateError("division by a non-constant expression");
    if (*value == 0)
        throw ElaborateError("division by zero");
    return *value;
}

// Which of elaborate's two binomial routes applies, with all side-conditions
// checked: lower index a nonneg integer constant (choose_poly route), or both
// arguments integer constants with upper - lower >= 0 (generalized route).
struct BinomForm {
    std::optional<unsigned long> choose_index;
    BigInt upper, lower;
};

BinomForm classify_binom(const Binom& node, const Env& env) {
    const auto lv = elaborate(*node.lower, env).constant_value();
    if (!lv)
        throw ElaborateError("binomial lower index is not constant");
    BinomForm form;
    if (is_integer(*lv) && *lv >= 0) {
        form.choose_index = require_small_nonneg(rat_numerator(*lv), "binomial lower index");
        return form;
    }
    const auto uv = elaborate(*node.upper, env).constant_value();
    if (!uv || !is_integer(*uv) || !is_integer(*lv))
        throw ElaborateError("binomial with lower index " + to_string(*lv) +
                             " requires constant integer arguments");
    form.upper = rat_numerator(*uv);
    form.lower = rat_numerator(*lv);
    if (form.upper - form.lower < 0)
        throw ElaborateError("binomial undefined: upper - lower = " +
                             to_string(BigInt(form.upper - form.lower)));
    return form;
}

} // namespace

Polynomial elaborate(const Expr& e, const Env& env) {
    return std::visit(
        [&env](const auto& node) -> Polynomial {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                return Polynomial::constant(Rational(node.value));
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                const auto it = env.find(node.name);
                if (it == env.end())
                    throw ElaborateError("unbound parameter '" + node.name + "'");
                return Polynomial::constant(Rational(it->second));
            } else if constexpr (std::is_same_v<T, VarRef>) {
                return Polynomial::variable(node.var);
            } else if constexpr (std::is_same_v<T, Neg>) {
                return -elaborate(*node.operand, env);
            } else if constexpr (std::is_same_v<T, Add>) {
                return elaborate(*node.lhs, env) + elaborate(*node.rhs, env);
            } else if constexpr (std::is_same_v<T, Sub>) {
                return elaborate(*node.lhs, env) - elaborate(*node.rhs, env);
            } else if constexpr (std::is_same_v<T, Mul>) {
                return elaborate(*node.lhs, env) * elaborate(*node.rhs, env);
            } else if constexpr (std::is_same_v<T, Div>) {
                const Rational den = checked_denominator(*node.denominator, env);
                return rat_div(Rational(1), den) * elaborate(*node.numerator, env);
            } else if constexpr (std::is_same_v<T, Pow>) {
                const BigInt k = require_const_integer(*node.exponent, env, "exponent");
                const unsigned long exponent = require_small_nonneg(k, "exponent");
                return elaborate(*node.base, env).pow(exponent);
            } else if constexpr (std::is_same_v<T, Binom>) {
                const BinomForm form = classify_binom(node, env);
                if (form.choose_index)
                    return substitute_x(choose_poly(static_cast<long>(*form.choose_index)),
                                        elaborate(*node.upper, env));
                return Polynomial::constant(Rational(gen_binomial(form.upper, form.lower)));
            } else {
                static_assert(std::is_same_v<T, Sum>);
                const BigInt lo = require_const_integer(*node.lo, env, "sum lower bound");
                const BigInt hi = require_const_integer(*node.hi, env, "sum upper bound");
                Polynomial acc;
                if (lo > hi)
                    return acc;
                check_sum_span(lo, hi);
                Env inner = env;
                for (BigInt i = lo; i <= hi; ++i) {
                    inner[node.index] = i;
                    acc += elaborate(*node.body, inner);
                }
                return acc;
            }
        },
        e.node());
}

long degree_bound(const Expr& e, const Env& env, Var v) {
    return std::visit(
        [&env, v](const auto& node) -> long {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                return 0;
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                if (!env.contains(node.name))
                    throw ElaborateError("unbound parameter '" + node.name + "'");
                return 0;
            } else if constexpr (std::is_same_v<T, VarRef>) {
                return node.var == v ? 1 : 0;
            } else if constexpr (std::is_same_v<T, Neg>) {
                return degree_bound(*node.operand, env, v);
            } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Sub>) {
                return std::max(degree_bound(*node.lhs, env, v), degree_bound(*node.rhs, env, v));
            } else if constexpr (std::is_same_v<T, Mul>) {
                return guard_degree(degree_bound(*node.lhs, env, v) +
                                    degree_bound(*node.rhs, env, v));
            } else if constexpr (std::is_same_v<T, Div>) {
                checked_denominator(*node.denominator, env);
                return degree_bound(*node.numerator, env, v);
            } else if constexpr (std::is_same_v<T, Pow>) {
                const BigInt k = require_const_integer(*node.exponent, env, "exponent");
                const unsigned long exponent = require_small_nonneg(k, "exponent");
                return guard_degree(static_cast<long>(exponent) *
                                    degree_bound(*node.base, env, v));
            } else if constexpr (std::is_same_v<T, Binom>) {
                const BinomForm form = classify_binom(node, env);
                if (form.choose_index)
                    return guard_degree(static_cast<long>(*form.choose_index) *
                                        degree_bound(*node.upper, env, v));
                return 0;
            } else {
                static_assert(std::is_same_v<T, Sum>);
                const BigInt lo = require_const_integer(*node.lo, env, "sum lower bound");
                const BigInt hi = require_const_integer(*node.hi, env, "sum upper bound");
                if (lo > hi)
                    return 0;
                check_sum_span(lo, hi);
                long best = 0;
                Env inner = env;
                for (BigInt i = lo; i <= hi; ++i) {
                    inner[node.index] = i;
                    best = std::max(best, degree_bound(*node.body, inner, v));
                }
                return best;
            }
        },
        e.node());
}

namespace {

Rational pow_rational(Rational base, unsigned long exponent) {
    Rational result(1);
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Rational binom_value(const Rational& upper, const Rational& lower) {
    if (!is_integer(lower))
        throw ElaborateError("binomial lower index is not an integer: " + to_string(lower));
    const BigInt l = rat_numerator(lower);
    if (l >= 0) {
        const unsigned long k = require_small_nonneg(l, "binomial lower index");
        if (is_integer(upper))
            return Rational(int_binomial(rat_numerator(upper), k));
        Rational product(1);
        for (unsigned long i = 0; i < k; ++i)
            product *= upper - Rational(i);
        return product / Rational(factorial(k));
    }
    if (!is_integer(upper))
        throw ElaborateError("binomial with lower index " + to_string(lower) +
                             " requires constant integer arguments");
    const BigInt u = rat_numerator(upper);
    if (u - l < 0)
        throw ElaborateError("binomial undefined: upper - lower = " + to_string(BigInt(u - l)));
    return Rational(gen_binomial(u, l));
}

} // namespace

Rational eval_expr(const Expr& e, const Env& env, const std::optional<Rational>& x_value,
                   const std::optional<Rational>& y_value) {
    return std::visit(
        [&](const auto& node) -> Rational {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                return Rational(node.value);
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                const auto it = env.find(node.name);
                if (it == env.end())
                    throw ElaborateError("unbound parameter '" + node.name + "'");
                return Rational(it->second);
            } else if constexpr (std::is_same_v<T, VarRef>) {
                const auto& slot = node.var == Var::X ? x_value : y_value;
                if (!slot)
                    throw ElaborateError(std::string("no value for ") +
                                         (node.var == Var::X ? "x" : "y"));
                return *slot;
            } else if constexpr (std::is_same_v<T, Neg>) {
                return -eval_expr(*node.operand, env, x_value, y_value);
            } else if constexpr (std::is_same_v<T, Add>) {
                return eval_expr(*node.lhs, env, x_value, y_value) +
                       eval_expr(*node.rhs, env, x_value, y_value);
            } else if constexpr (std::is_same_v<T, Sub>) {
                return eval_expr(*node.lhs, env, x_value, y_value) -
                       eval_expr(*node.rhs, env, x_value, y_value);
            } else if constexpr (std::is_same_v<T, Mul>) {
                return eval_expr(*node.lhs, env, x_value, y_value) *
                       eval_expr(*node.rhs, env, x_value, y_value);
            } else if constexpr (std::is_same_v<T, Div>) {
                return rat_div(eval_expr(*node.numerator, env, x_value, y_value),
                               eval_expr(*node.denominator, env, x_value, y_value));
            } else if constexpr (std::is_same_v<T, Pow>) {
                const Rational ev = eval_expr(*node.exponent, env, x_value, y_value);
                if (!is_integer(ev))
                    throw ElaborateError("exponent is not an integer: " + to_string(ev));
                const unsigned long k = require_small_nonneg(rat_numerator(ev), "exponent");
                return pow_rational(eval_expr(*node.base, env, x_value, y_value), k);
            } else if constexpr (std::is_same_v<T, Binom>) {
                return binom_value(eval_expr(*node.upper, env, x_value, y_value),
                                   eval_expr(*node.lower, env, x_value, y_value));
            } else {
                static_assert(std::is_same_v<T, Sum>);
                const Rational lov = eval_expr(*node.lo, env, x_value, y_value);
                const Rational hiv = eval_expr(*node.hi, env, x_value, y_value);
                if (!is_integer(lov) || !is_integer(hiv))
                    throw ElaborateError("sum bounds are not integers");
                const BigInt lo = rat_numerator(lov);
                const BigInt hi = rat_numerator(hiv);
                Rational acc(0);
                if (lo > hi)
                    return acc;
                check_sum_span(lo, hi);
                Env inner = env;
                for (BigInt i = lo; i <= hi; ++i) {
                    inner[node.index] = i;
                    acc += eval_expr(*node.body, inner, x_value, y_value);
                }
                return acc;
            }
        },
        e.node());
}

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::Symbolic:
        return "symbolic";
    case Strategy::Points:
        return "points";
    case Strategy::Both:
        return "both";
    }
    return "unknown";
}

std::string VerificationReport::status() const {
    if (!disagreements.empty())
        return "disagreement";
    if (!errors.empty())
        return "error";
    if (!failures.empty())
        return "fail";
    return "pass";
}

namespace {

enum class SingleStatus { Pass, Fail, Error };

const char* single_status_name(SingleStatus s) {
    switch (s) {
    case SingleStatus::Pass:
        return "pass";
    case SingleStatus::Fail:
        return "fail";
    case SingleStatus::Error:
        return "error";
    }
    return "unknown";
}

struct SingleOutcome {
    SingleStatus status = SingleStatus::Pass;
    std::optional<Counterexample> failure;
    std::optional<std::string> error;
    unsigned long long points = 0;
};

Point witness_point(const Identity& id, const BigInt& x, const BigInt& y) {
    Point pt;
    if (id.uses_x)
        pt.x = x;
    if (id.uses_y)
        pt.y = y;
    return pt;
}

SingleOutcome run_symbolic(const Identity& id, const Binding& binding) {
    SingleOutcome out;
    try {
        const Polynomial lhs = elaborate(*id.lhs, binding);
        const Polynomial rhs = elaborate(*id.rhs, binding);
        const Polynomial diff = lhs - rhs;
        if (diff.is_zero())
            return out;
        Counterexample cex;
        cex.strategy = Strategy::Symbolic;
        cex.binding = binding;
        // A nonzero difference cannot vanish on all of {0..deg_x} x {0..deg_y},
        // so this scan always produces a witness.
        const long dx = std::max(diff.degree_in(Var::X), 0L);
        const long dy = std::max(diff.degree_in(Var::Y), 0L);
        for (long a = 0; a <= dx && !cex.point; ++a)
            for (long c = 0; c <= dy; ++c)
                if (diff.eval(Rational(a), Rational(c)) != 0) {
                    cex.point = witness_point(id, BigInt(a), BigInt(c));
                    cex.lhs_value = to_string(lhs.eval(Rational(a), Rational(c)));
                    cex.rhs_value = to_string(rhs.eval(Rational(a), Rational(c)));
                    break;
                }
        if (!cex.point)
            throw std::logic_error("no witness found for a nonzero difference");
        out.status = SingleStatus::Fail;
        out.failure = std::move(cex);
    } catch (const std::exception& ex) {
        out.status = SingleStatus::Error;
        out.error = ex.what();
        out.failure.reset();
    }
    return out;
}

std::vector<BigInt> axis_values(long bound, const Interval* extension) {
    std::set<BigInt> values;
    for (long t = 0; t <= bound; ++t)
        values.insert(BigInt(t));
    if (extension)
        for (BigInt v = extension->lo; v <= extension->hi; ++v)
            values.insert(v);
    return {values.begin(), values.end()};
}

SingleOutcome run_points(const Identity& id, const Binding& binding,
                         const std::map<Var, Interval>& grid_extension) {
    SingleOutcome out;
    try {
        const long dx = std::max(degree_bound(*id.lhs, binding, Var::X),
                                 degree_bound(*id.rhs, binding, Var::X));
        const long dy = std::max(degree_bound(*id.lhs, binding, Var::Y),
                                 degree_bound(*id.rhs, binding, Var::Y));
        const Interval* ext_x = nullptr;
        const Interval* ext_y = nullptr;
        if (const auto it = grid_extension.find(Var::X); it != grid_extension.end())
            ext_x = &it->second;
        if (const auto it = grid_extension.find(Var::Y); it != grid_extension.end())
            ext_y = &it->second;

        const auto axis_count = [](long bound, const Interval* ext) {
            BigInt count = BigInt(bound) + 1;
            if (ext && ext->hi >= ext->lo)
                count += ext->hi - ext->lo + 1;
            return count;
        };
        const BigInt point_bound = (id.uses_x ? axis_count(dx, ext_x) : BigInt(1)) *
                                   (id.uses_y ? axis_count(dy, ext_y) : BigInt(1));
        if (point_bound > kMaxGridPoints)
            throw ElaborateError("point grid larger than " + to_string(kMaxGridPoints) +
                                 " points");

        const std::vector<BigInt> xs =
            id.uses_x ? axis_values(dx, ext_x) : std::vector<BigInt>{BigInt(0)};
        const std::vector<BigInt> ys =
            id.uses_y ? axis_values(dy, ext_y) : std::vector<BigInt>{BigInt(0)};
        for (const BigInt& a : xs) {
            const std::optional<Rational> xv{Rational(a)};
            for (const BigInt& c : ys) {
                const std::optional<Rational> yv{Rational(c)};
                ++out.points;
                const Rational lv = eval_expr(*id.lhs, binding, xv, yv);
                const Rational rv = eval_expr(*id.rhs, binding, xv, yv);
                if (lv != rv) {
                    Counterexample cex;
                    cex.strategy = Strategy::Points;
                    cex.binding = binding;
                    cex.point = witness_point(id, a, c);
                    cex.lhs_value = to_string(lv);
                    cex.rhs_value = to_string(rv);
                    out.status = SingleStatus::Fail;
                    out.failure = std::move(cex);
                    return out;
                }
            }
        }
    } catch (const std::exception& ex) {
        out.status = SingleStatus::Error;
        out.error = ex.what();
        out.failure.reset();
    }
    return out;
}

std::vector<std::string> param_names(const Identity& id) {
    std::vector<std::string> names;
    names.reserve(id.params.size());
    for (const auto& p : id.params)
        names.push_back(p.name);
    return names;
}

void fold_outcome(VerificationReport& report, const Binding& binding, Strategy strategy,
                  const SingleOutcome& outcome) {
    if (outcome.failure)
        report.failures.push_back(*outcome.failure);
    if (outcome.error)
        report.errors.push_back(BindingError{strategy, binding, *outcome.error});
}

struct Slot {
    Binding binding;
    SingleOutcome symbolic, points;
    bool has_symbolic = false, has_points = false;
};

} // namespace

VerificationReport verify_symbolic(const Identity& id, const Binding& b) {
    VerificationReport report;
    report.identity = id.name;
    report.strategy = Strategy::Symbolic;
    report.param_order = param_names(id);
    report.bindings_checked = 1;
    fold_outcome(report, b, Strategy::Symbolic, run_symbolic(id, b));
    return report;
}

VerificationReport verify_points(const Identity& id, const Binding& b,
                                 const std::map<Var, Interval>& grid_extension) {
    VerificationReport report;
    report.identity = id.name;
    report.strategy = Strategy::Points;
    report.param_order = param_names(id);
    report.bindings_checked = 1;
    const SingleOutcome outcome = run_points(id, b, grid_extension);
    report.points_checked = outcome.points;
    fold_outcome(report, b, Strategy::Points, outcome);
    return report;
}

VerificationReport verify_range(const Identity& id, const RangeSpec& ranges, Strategy strategy,
                                unsigned jobs) {
    validate(id);

    std::vector<std::string> names;
    std::vector<Interval> intervals;
    names.reserve(id.params.size());
    for (const auto& p : id.params) {
        const auto it = ranges.params.find(p.name);
        if (it == ranges.params.end())
            throw std::invalid_argument("no range for parameter '" + p.name + "'");
        const Interval& ival = it->second;
        if (ival.lo > ival.hi)
            throw std::invalid_argument("empty range for parameter '" + p.name + "'");
        if (ival.lo < p.min_value)
            throw std::invalid_argument("range for parameter '" + p.name + "' starts below " +
                                        to_string(p.min_value));
        names.push_back(p.name);
        intervals.push_back(ival);
    }
    for (const auto& [name, ival] : ranges.params) {
        (void)ival;
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw std::invalid_argument("identity '" + id.name + "' has no parameter '" + name +
                                        "'");
    }
    for (const auto& [v, ival] : ranges.grid_extension) {
        (void)ival;
        if (!(v == Var::X ? id.uses_x : id.uses_y))
            throw std::invalid_argument("identity '" + id.name + "' does not use " +
                                        (v == Var::X ? "x" : "y"));
    }

    BigInt total(1);
    std::vector<BigInt> sizes;
    sizes.reserve(intervals.size());
    for (const Interval& ival : intervals) {
        sizes.push_back(ival.hi - ival.lo + 1);
        total *= sizes.back();
        if (total > kMaxBindings)
            throw std::invalid_argument("sweep of more than " + to_string(kMaxBindings) +
                                        " bindings");
    }
    const auto count = static_cast<std::size_t>(to_long_checked(total, "binding count"));

    // The first declared parameter varies slowest; this order is also the
    // merge and report order, independent of the jobs count.
    const auto binding_at = [&](std::size_t index) {
        Binding b;
        for (std::size_t i = names.size(); i-- > 0;) {
            const auto size = static_cast<std::size_t>(to_long_checked(sizes[i], "range size"));
            b[names[i]] = intervals[i].lo + BigInt(index % size);
            index /= size;
        }
        return b;
    };

    std::vector<Slot> slots(count);
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Slot& slot = slots[i];
            slot.binding = binding_at(i);
            if (strategy == Strategy::Symbolic || strategy == Strategy::Both) {
                slot.symbolic = run_symbolic(id, slot.binding);
                slot.has_symbolic = true;
            }
            if (strategy == Strategy::Points || strategy == Strategy::Both) {
                slot.points = run_points(id, slot.binding, ranges.grid_extension);
                slot.has_points = true;
            }
        }
    };

    const unsigned worker_count =
        std::max<unsigned>(1, std::min<unsigned>(jobs ? jobs : 1, static_cast<unsigned>(count)));
    if (worker_count <= 1) {
        work(0, count);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        const std::size_t chunk = (count + worker_count - 1) / worker_count;
        for (unsigned t = 0; t < worker_count; ++t) {
            const std::size_t begin = std::min<std::size_t>(std::size_t(t) * chunk, count);
            const std::size_t end = std::min<std::size_t>(begin + chunk, count);
            if (begin < end)
                pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool)
            th.join();
    }

    VerificationReport report;
    report.identity = id.name;
    report.strategy = strategy;
    report.param_order = names;
    report.bindings_checked = count;
    for (const Slot& slot : slots) {
        if (slot.has_points)
            report.points_checked += slot.points.points;
        if (strategy == Strategy::Both && slot.symbolic.status != slot.points.status)
            report.disagreements.push_back(Disagreement{slot.binding,
                                                        single_status_name(slot.symbolic.status),
                                                        single_status_name(slot.points.status)});
        if (slot.has_symbolic)
            fold_outcome(report, slot.binding, Strategy::Symbolic, slot.symbolic);
        if (slot.has_points)
            fold_outcome(report, slot.binding, Strategy::Points, slot.points);
    }
    return report;
}

namespace {

std::string binding_str(const Binding& binding, const std::vector<std::string>& order,
                        const char* sep) {
    std::string out;
    for (const auto& name : order) {
        const auto it = binding.find(name);
        if (it == binding.end())
            continue;
        if (!out.empty())
            out += sep;
        out += name;
        out += '=';
        out += to_string(it->second);
    }
    return out.empty() ? "-" : out;
}

std::string point_str(const std::optional<Point>& point, const char* sep) {
    if (!point)
        return "-";
    std::string out;
    if (point->x)
        out += "x=" + to_string(*point->x);
    if (point->y) {
        if (!out.empty())
            out += sep;
        out += "y=" + to_string(*point->y);
    }
    return out.empty() ? "-" : out;
}

} // namespace

std::string render_text(const VerificationReport& r) {
    std::string status = r.status();
    for (char& ch : status)
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::string out = r.identity + ": " + status;
    out += " strategy=" + std::string(strategy_name(r.strategy));
    out += " bindings=" + std::to_string(r.bindings_checked);
    if (r.strategy != Strategy::Symbolic)
        out += " points=" + std::to_string(r.points_checked);
    out += "\n";
    for (const auto& f : r.failures) {
        out += "  counterexample (" + std::string(strategy_name(f.strategy)) + ") " +
               binding_str(f.binding, r.param_order, ", ");
        out += " at " + point_str(f.point, ", ");
        out += ": lhs = " + f.lhs_value + ", rhs = " + f.rhs_value + "\n";
    }
    for (const auto& d : r.disagreements)
        out += "  disagreement " + binding_str(d.binding, r.param_order, ", ") +
               ": symbolic=" + d.symbolic_status + ", points=" + d.points_status + "\n";
    for (const auto& e : r.errors)
        out += "  error (" + std::string(strategy_name(e.strategy)) + ") " +
               binding_str(e.binding, r.param_order, ", ") + ": " + e.message + "\n";
    return out;
}

std::string render_machine(const VerificationReport& r) {
    std::string out;
    for (const auto& f : r.failures) {
        out += "counterexample identity=" + r.identity;
        out += " strategy=" + std::string(strategy_name(f.strategy));
        out += " binding=" + binding_str(f.binding, r.param_order, ";");
        out += " point=" + point_str(f.point, ";");
        out += " lhs=" + f.lhs_value + " rhs=" + f.rhs_value + "\n";
    }
    for (const auto& d : r.disagreements) {
        out += "disagreement identity=" + r.identity;
        out += " binding=" + binding_str(d.binding, r.param_order, ";");
        out += " symbolic=" + d.symbolic_status + " points=" + d.points_status + "\n";
    }
    for (const auto& e : r.errors) {
        out += "error identity=" + r.identity;
        out += " strategy=" + std::string(strategy_name(e.strategy));
        out += " binding=" + binding_str(e.binding, r.param_order, ";");
        out += " message=" + e.message + "\n";
    }
    out += "result identity=" + r.identity;
    out += " strategy=" + std::string(strategy_name(r.strategy));
    out += " bindings=" + std::to_string(r.bindings_checked);
    out += " points=" + std::to_string(r.points_checked);
    out += " failures=" + std::to_string(r.failures.size());
    out += " disagreements=" + std::to_string(r.disagreements.size());
    out += " errors=" + std::to_string(r.errors.size());
    out += " status=" + r.status() + "\n";
    return out;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
    bool any_fail = false, any_error = false;
    for (const auto& r : reports) {
        if (!r.disagreements.empty())
            return 3;
        any_error = any_error || !r.errors.empty();
        any_fail = any_fail || !r.failures.empty();
    }
    if (any_error)
        return 2;
    if (any_fail)
        return 1;
    return 0;
}

} // namespace binomid

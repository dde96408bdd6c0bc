#include "binomid/catalog.hpp"

#include <stdexcept>
#include <utility>

namespace binomid {

namespace {

using namespace dsl;

Identity make(std::string name, std::vector<ParamDecl> params, bool uses_x, bool uses_y,
              ExprPtr lhs, ExprPtr rhs) {
    Identity id;
    id.name = std::move(name);
    id.params = std::move(params);
    id.uses_x = uses_x;
    id.uses_y = uses_y;
    id.lhs = std::move(lhs);
    id.rhs = std::move(rhs);
    validate(id);
    return id;
}

// ((x + 1)^e + (x - 1)^e) / 2, the even part of (x + 1)^e.
ExprPtr half_pow_sum(const ExprPtr& e) {
    return frac(power(var_x() + 1, e) + power(var_x() - 1, e), lit(2));
}

// sum(m = 0 .. hi, binom(a - m, m) * binom(m, hi - m)), i.e. S_hi(a).
ExprPtr s_sum(const ExprPtr& a, const ExprPtr& hi) {
    const ExprPtr m = param("m");
    return sum("m", lit(0), hi, binom(a - m, m) * binom(m, hi - m));
}

std::vector<Identity> build_catalog() {
    std::vector<Identity> out;
    const ExprPtr x = var_x();
    const ExprPtr y = var_y();
    const ExprPtr n = param("n");
    const ExprPtr m = param("m");
    const ExprPtr k = param("k");

    {
        const ExprPtr n1 = param("n1");
        const ExprPtr n2 = param("n2");
        const ExprPtr n3 = param("n3");
        const ExprPtr n4 = param("n4");
        out.push_back(make(
            "theorem_binomial_even", {{"n1", 0}, {"n2", 0}, {"n3", 0}}, false, false,
            binom(2 * n1 + n2 + 2 * n3 + 1, 2 * n3) + binom(n2 + 2 * n3, 2 * n3),
            sum("n4", lit(0), n3,
                (binom(n1 + n2 + n3 + n4 + 1, 2 * n4) + binom(n1 + n2 + n3 + n4, 2 * n4)) *
                    binom(n1 + n3 - n4, 2 * (n3 - n4)))));
        out.push_back(make(
            "theorem_binomial_odd", {{"n1", 0}, {"n2", 0}, {"n3", 0}}, false, false,
            binom(2 * n1 + n2 + 2 * n3 + 2, 2 * n3) + binom(n2 + 2 * n3, 2 * n3),
            sum("n4", lit(0), n3,
                binom(n1 + n2 + n3 + n4 + 1, 2 * n4) *
                    (binom(n1 + n3 - n4 + 1, 2 * (n3 - n4)) + binom(n1 + n3 - n4, 2 * (n3 - n4))))));
    }

    out.push_back(make(
        "theorem_polynomial_even", {{"n", 0}}, true, false,
        power(x, 2 * n) + power(x + 1, 2 * n),
        sum("m", lit(0), n,
            (binom(2 * n - m, m) + binom(2 * n - m - 1, m - 1)) * power(x, m) * power(x + 1, m))));
    out.push_back(make(
        "theorem_polynomial_odd", {{"n", 0}}, true, false,
        power(x, 2 * n + 1) + power(x + 1, 2 * n + 1),
        sum("m", lit(0), n,
            binom(2 * n - m, m) *
                (power(x, m + 1) * power(x + 1, m) + power(x, m) * power(x + 1, m + 1)))));

    out.push_back(make(
        "eq_evenpolynomial", {{"m", 0}, {"n", 0}}, true, false,
        power(x, 2 * n) * half_pow_sum(m) + half_pow_sum(m + 2 * n),
        sum("k", lit(0), n,
            (binom(2 * n - k, k) + binom(2 * n - k - 1, k - 1)) * power(x, k) *
                half_pow_sum(m + k))));
    out.push_back(make(
        "eq_oddpolynomial", {{"m", 0}, {"n", 0}}, true, false,
        power(x, 2 * n + 1) * half_pow_sum(m) + half_pow_sum(m + 2 * n + 1),
        sum("k", lit(0), n,
            binom(2 * n - k, k) * (power(x, k + 1) * half_pow_sum(m + k) +
                                   power(x, k) * half_pow_sum(m + k + 1)))));

    out.push_back(make(
        "lemma_polynomial_even", {{"n", 0}}, true, true,
        binom(x + y + n, 2 * n) + binom(x - y + n, 2 * n),
        sum("m", lit(0), n,
            binom(x + m, 2 * m) * (binom(y + n - m, 2 * (n - m)) +
                                   binom(y - 1 + (n - m), 2 * (n - m))))));
    out.push_back(make(
        "lemma_polynomial_odd", {{"n", 0}}, true, true,
        binom(x + y + n, 2 * n + 1) + binom(x - y + n, 2 * n + 1),
        sum("m", lit(0), n,
            binom(x + m, 2 * m + 1) * (binom(y + n - m, 2 * (n - m)) +
                                       binom(y - 1 + (n - m), 2 * (n - m))))));

    out.push_back(make(
        "lemma_binomial_1", {{"n", 0}}, true, true,
        sum("m", lit(0), n, binom(x - m, m) * binom(y + m, n - m)),
        s_sum(x + y, n)));
    out.push_back(make(
        "lemma_binomial_2", {{"n", 0}}, true, false,
        binom(x, n),
        s_sum(x, n) + s_sum(x - 1, n - 1)));

    out.push_back(make(
        "pascal", {{"n", 0}}, true, false,
        binom(x, n + 1),
        binom(x - 1, n + 1) + binom(x - 1, n)));
    out.push_back(make(
        "reflection", {{"n", 0}}, true, false,
        binom(x, n),
        power(neg(lit(1)), n) * binom(n - 1 - x, n)));

    out.push_back(make(
        "eq_increment", {{"n", 0}}, true, true,
        sum("m", lit(0), n, binom(x + 1 - m, m) * binom(y + m, n - m)),
        sum("m", lit(0), n, binom(x - m, m) * binom(y + 1 + m, n - m))));
    out.push_back(make(
        "eq_xincrement", {{"n", 0}}, true, true,
        sum("m", lit(0), n, (binom(x + 1 - m, m) - binom(x - m, m)) * binom(y + m, n - m)),
        s_sum(x + y, n - 1)));
    out.push_back(make(
        "eq_yincrement", {{"n", 0}}, true, true,
        sum("m", lit(0), n, binom(x - m, m) * (binom(y + 1 + m, n - m) - binom(y + m, n - m))),
        s_sum(x + y, n - 1)));

    out.push_back(make(
        "s_diagonal", {{"n", 0}}, false, false,
        sum("m", lit(0), n, binom(n - m, m) * binom(m, n - m)),
        frac(1 + power(neg(lit(1)), n), lit(2))));
    out.push_back(make(
        "s_difference", {{"n", 0}}, true, false,
        s_sum(x, n) - s_sum(x - 1, n),
        s_sum(x - 1, n - 1)));

    return out;
}

} // namespace

const std::vector<Identity>& builtin_catalog() {
    static const std::vector<Identity> catalog = build_catalog();
    return catalog;
}

const Identity* find_identity(const std::string& name) {
    for (const Identity& id : builtin_catalog()) {
        if (id.name == name) return &id;
    }
    return nullptr;
}

RangeSpec catalog_default_ranges(const std::string& name) {
    const auto interval = [](long lo, long hi) { return Interval{BigInt(lo), BigInt(hi)}; };
    RangeSpec spec;
    if (name == "theorem_binomial_even" || name == "theorem_binomial_odd") {
        spec.params = {{"n1", interval(0, 12)}, {"n2", interval(0, 12)}, {"n3", interval(0, 12)}};
    } else if (name == "theorem_polynomial_even" || name == "theorem_polynomial_odd") {
        spec.params = {{"n", interval(0, 50)}};
    } else if (name == "eq_evenpolynomial" || name == "eq_oddpolynomial") {
        spec.params = {{"m", interval(0, 10)}, {"n", interval(0, 10)}};
    } else if (name == "lemma_polynomial_even" || name == "lemma_polynomial_odd" ||
               name == "lemma_binomial_1") {
        spec.params = {{"n", interval(0, 20)}};
        spec.grid_extension = {{Var::X, interval(-20, 20)}, {Var::Y, interval(-20, 20)}};
    } else if (name == "lemma_binomial_2") {
        spec.params = {{"n", interval(0, 20)}};
        spec.grid_extension = {{Var::X, interval(-20, 20)}};
    } else if (name == "pascal" || name == "reflection" || name == "eq_increment" ||
               name == "eq_xincrement" || name == "eq_yincrement" || name == "s_diagonal" ||
               name == "s_difference") {
        spec.params = {{"n", interval(0, 30)}};
    } else {
        throw std::invalid_argument("unknown identity '" + name + "'");
    }
    return spec;
}

} // namespace binomid

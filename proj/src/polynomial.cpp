#include "binomid/polynomial.hpp"

#include <sstream>
#include <vector>

namespace binomid {

Polynomial Polynomial::constant(Rational value) {
    Polynomial p;
    if (value != 0)
        p.terms_.emplace(Monomial{0, 0}, std::move(value));
    return p;
}

Polynomial Polynomial::variable(Var v) {
    Polynomial p;
    p.terms_.emplace(v == Var::X ? Monomial{1, 0} : Monomial{0, 1}, Rational(1));
    return p;
}

Polynomial Polynomial::term(Rational coeff, unsigned deg_x, unsigned deg_y) {
    Polynomial p;
    if (coeff != 0)
        p.terms_.emplace(Monomial{deg_x, deg_y}, std::move(coeff));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

std::optional<Rational> Polynomial::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (is_constant())
        return terms_.begin()->second;
    return std::nullopt;
}

bool Polynomial::has_var(Var v) const {
    for (const auto& [m, c] : terms_)
        if ((v == Var::X ? m.deg_x : m.deg_y) > 0)
            return true;
    return false;
}

long Polynomial::degree_in(Var v) const {
    long deg = -1;
    for (const auto& [m, c] : terms_) {
        const long d = v == Var::X ? m.deg_x : m.deg_y;
        if (d > deg)
            deg = d;
    }
    return deg;
}

Rational Polynomial::coefficient(unsigned deg_x, unsigned deg_y) const {
    const auto it = terms_.find(Monomial{deg_x, deg_y});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0)
        return;
    const auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial result;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            result.add_term(Monomial{ma.deg_x + mb.deg_x, ma.deg_y + mb.deg_y}, ca * cb);
    return result;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial result;
    for (const auto& [m, c] : terms_)
        result.terms_.emplace(m, -c);
    return result;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial result;
    if (c == 0)
        return result;
    for (const auto& [m, coeff] : p.terms_)
        result.terms_.emplace(m, c * coeff);
    return result;
}

Polynomial Polynomial::pow(unsigned long exponent) const {
    Polynomial result = constant(Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

Rational Polynomial::eval(const Rational& x_value, const Rational& y_value) const {
    const long dx = degree_in(Var::X);
    const long dy = degree_in(Var::Y);
    std::vector<Rational> x_powers(static_cast<std::size_t>(dx < 0 ? 1 : dx + 1));
    std::vector<Rational> y_powers(static_cast<std::size_t>(dy < 0 ? 1 : dy + 1));
    x_powers[0] = 1;
    for (std::size_t i = 1; i < x_powers.size(); ++i)
        x_powers[i] = x_powers[i - 1] * x_value;
    y_powers[0] = 1;
    for (std::size_t i = 1; i < y_powers.size(); ++i)
        y_powers[i] = y_powers[i - 1] * y_value;
    Rational sum = 0;
    for (const auto& [m, c] : terms_)
        sum += c * x_powers[m.deg_x] * y_powers[m.deg_y];
    return sum;
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string out;
    if (m.deg_x > 0) {
        out += "x";
        if (m.deg_x > 1)
            out += "^" + std::to_string(m.deg_x);
    }
    if (m.deg_y > 0) {
        if (!out.empty())
            out += "*";
        out += "y";
        if (m.deg_y > 1)
            out += "^" + std::to_string(m.deg_y);
    }
    return out;
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative)
                out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const std::string mono = monomial_str(m);
        if (mono.empty()) {
            out << to_string(magnitude);
        } else if (magnitude == 1) {
            out << mono;
        } else {
            out << to_string(magnitude) << "*" << mono;
        }
    }
    return out.str();
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p = Rational(coeff_x) * Polynomial::variable(Var::X);
    p += Rational(coeff_y) * Polynomial::variable(Var::Y);
    p += Polynomial::constant(Rational(constant));
    return p;
}

Polynomial substitute_x(const Polynomial& p, const Polynomial& value) {
    if (p.has_var(Var::Y))
        throw std::invalid_argument("substitute_x requires a polynomial univariate in x");
    const long deg = p.degree_in(Var::X);
    if (deg <= 0)
        return p;
    // Horner evaluation over the coefficient sequence, highest degree first.
    Polynomial result;
    long previous = deg;
    bool started = false;
    for (const auto& [m, c] : p.terms()) {
        if (!started) {
            result = Polynomial::constant(c);
            started = true;
        } else {
            for (long k = previous; k > static_cast<long>(m.deg_x); --k)
                result *= value;
            result += Polynomial::constant(c);
        }
        previous = m.deg_x;
    }
    for (long k = previous; k > 0; --k)
        result *= value;
    return result;
}

Polynomial compose_linear(const Polynomial& p, const LinearForm& form) {
    return substitute_x(p, form.to_polynomial());
}

} // namespace binomid

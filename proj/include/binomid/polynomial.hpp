#pragma once

#include "binomid/exact.hpp"

#include <map>
#include <optional>
#include <string>

namespace binomid {

enum class Var { X, Y };

struct Monomial {
    unsigned deg_x = 0;
    unsigned deg_y = 0;

    unsigned total_degree() const { return deg_x + deg_y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: graded lexicographic with x before y, largest first.
// Iteration over a polynomial's terms yields the printing order directly.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() > b.total_degree();
        return a.deg_x > b.deg_x;
    }
};

// Sparse exact polynomial in the indeterminates x and y over the rationals.
// Invariants: no stored coefficient is zero; zero is the empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default; // the zero polynomial

    static Polynomial constant(Rational value);
    static Polynomial variable(Var v);
    static Polynomial term(Rational coeff, unsigned deg_x, unsigned deg_y);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The value of a constant polynomial (zero included); nullopt otherwise.
    std::optional<Rational> constant_value() const;
    bool has_var(Var v) const;

    // Largest exponent of v over stored terms; -1 for the zero polynomial.
    long degree_in(Var v) const;

    Rational coefficient(unsigned deg_x, unsigned deg_y) const;
    const TermMap& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    Polynomial pow(unsigned long exponent) const;

    Rational eval(const Rational& x_value, const Rational& y_value) const;

    // Canonical normal-form rendering, e.g. "x^2 + 2*x*y + y^2"; "0" for zero.
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& coeff);

    TermMap terms_;
};

// Integer-coefficient linear form a*x + b*y + c, the shape that appears as a
// binomial argument.
struct LinearForm {
    BigInt coeff_x;
    BigInt coeff_y;
    BigInt constant;

    Polynomial to_polynomial() const;
};

// p with x replaced by `value`, fully expanded. p must be univariate in x;
// a polynomial involving y is rejected with std::invalid_argument.
Polynomial substitute_x(const Polynomial& p, const Polynomial& value);

// Special case of substitute_x for linear arguments.
Polynomial compose_linear(const Polynomial& p, const LinearForm& form);

} // namespace binomid

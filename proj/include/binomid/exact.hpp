#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace binomid {

// Exact arbitrary-precision integers and rationals. Rationals are always
// normalized: gcd(|num|, den) = 1, den > 0, and zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

inline BigInt rat_numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_denominator(q) == 1; }

// The integer value of an integral rational; throws std::invalid_argument otherwise.
BigInt to_integer(const Rational& q);

// Checked division; the only rational operation that can fail.
Rational rat_div(const Rational& a, const Rational& b);

BigInt factorial(unsigned long k);

// Value at the integer n of the degree-k falling-factorial binomial,
// n(n-1)...(n-k+1)/k!. Defined for every integer n, including negatives.
BigInt int_binomial(const BigInt& n, unsigned long k);

BigInt parse_bigint(std::string_view text);

// Accepts "p" or "p/q" with optional signs; the result is normalized.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& q);

// Conversion with an explicit range check; `what` names the value in errors.
long long to_long_checked(const BigInt& v, const char* what);

} // namespace binomid

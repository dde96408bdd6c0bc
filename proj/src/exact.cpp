#include "binomid/exact.hpp"

#include <cctype>
#include <limits>

namespace binomid {

BigInt to_integer(const Rational& q) {
    if (!is_integer(q))
        throw std::invalid_argument("not an integer: " + to_string(q));
    return rat_numerator(q);
}

Rational rat_div(const Rational& a, const Rational& b) {
    if (b == 0)
        throw DivisionByZero();
    return a / b;
}

BigInt factorial(unsigned long k) {
    BigInt result = 1;
    for (unsigned long i = 2; i <= k; ++i)
        result *= i;
    return result;
}

namespace {
constexpr unsigned long kBinomialIndexLimit = 20'000'000;
} // namespace

BigInt int_binomial(const BigInt& n, unsigned long k) {
    // A zero factor appears in the falling factorial whenever 0 <= n < k.
    if (n >= 0 && n < k)
        return 0;
    unsigned long steps = k;
    if (n >= 0) {
        const BigInt complement = n - k;
        if (complement < steps)
            steps = complement.convert_to<unsigned long>();
    }
    if (steps > kBinomialIndexLimit)
        throw std::overflow_error("binomial index too large: " + std::to_string(steps));
    BigInt result = 1;
    for (unsigned long i = 0; i < steps; ++i) {
        result *= n - i;
        result /= i + 1; // exact: the partial product is the binomial at index i+1
    }
    return result;
}

BigInt parse_bigint(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    if (pos == text.size())
        throw std::invalid_argument("empty integer literal");
    for (std::size_t i = pos; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_bigint(text));
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0)
        throw DivisionByZero();
    return Rational(num) / Rational(den);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q) { return q.str(); }

long long to_long_checked(const BigInt& v, const char* what) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi)
        throw std::overflow_error(std::string(what) + " out of range: " + v.str());
    return v.convert_to<long long>();
}

} // namespace binomid

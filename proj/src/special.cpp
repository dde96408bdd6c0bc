#include "binomid/special.hpp"

#include <map>
#include <mutex>

namespace binomid {

Polynomial choose_poly(long n) {
    if (n < 0)
        throw std::domain_error("choose_poly: negative degree " + std::to_string(n));

    static std::mutex cache_mutex;
    static std::map<long, Polynomial> cache;
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    // C(x, k) = C(x, k-1) * (x - k + 1) / k, starting from C(x, 0) = 1.
    Polynomial p = Polynomial::constant(Rational(1));
    for (long k = 1; k <= n; ++k) {
        p *= Polynomial::variable(Var::X) - Polynomial::constant(Rational(k - 1));
        p = Rational(BigInt(1), BigInt(k)) * p;
    }
    cache.emplace(n, p);
    return p;
}

BigInt gen_binomial(const BigInt& upper, const BigInt& lower) {
    const BigInt diff = upper - lower;
    if (diff < 0)
        throw UndefinedBinomial("generalized binomial undefined: upper - lower = " +
                                to_string(diff));
    const long long k = to_long_checked(diff, "binomial index");
    return int_binomial(upper, static_cast<unsigned long>(k));
}

Polynomial f_plus(unsigned long n) {
    const Polynomial x = Polynomial::variable(Var::X);
    const Polynomial one = Polynomial::constant(Rational(1));
    return Rational(1, 2) * ((x + one).pow(n) + (x - one).pow(n));
}

Polynomial s_poly(long n) {
    Polynomial result;
    for (long m = 0; m <= n; ++m) {
        const BigInt weight = int_binomial(BigInt(m), static_cast<unsigned long>(n - m));
        if (weight == 0)
            continue;
        const LinearForm shift{BigInt(1), BigInt(0), BigInt(-m)};
        result += Rational(weight) * compose_linear(choose_poly(m), shift);
    }
    return result;
}

} // namespace binomid

#pragma once

#include "binomid/polynomial.hpp"

#include <stdexcept>

namespace binomid {

// Generalized binomial requested where upper - lower is negative.
class UndefinedBinomial : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The binomial polynomial C(x, n) = x(x-1)...(x-n+1)/n!, univariate in x.
// Cached internally; safe to call from multiple threads.
Polynomial choose_poly(long n);

// Generalized binomial C(upper, lower) = int_binomial(upper, upper - lower).
// Defined only when upper - lower >= 0; throws UndefinedBinomial otherwise.
BigInt gen_binomial(const BigInt& upper, const BigInt& lower);

// ((x+1)^n + (x-1)^n) / 2; keeps the terms of (x+1)^n whose degree has the
// parity of n.
Polynomial f_plus(unsigned long n);

// S_n(x) = sum_{m=0}^{n} C(x-m, m) * C(m, n-m); the zero polynomial for n < 0.
Polynomial s_poly(long n);

} // namespace binomid

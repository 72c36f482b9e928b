#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "symtree/errors.hpp"

namespace symtree {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_pow(BigInt base, unsigned long long exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1ULL) r *= base;
        base *= base;
        exp >>= 1ULL;
    }
    return r;
}

inline BigInt bigint_factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// Exact fraction, always kept reduced with a positive denominator.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

}  // namespace symtree

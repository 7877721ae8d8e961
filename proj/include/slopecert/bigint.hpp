#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace slopecert {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in lowest terms, denominator > 0.  cpp_rational keeps the
// canonical form on every operation, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Valuations live in Z ∪ {+inf}; +inf is the valuation of 0.
struct Valuation {
    long v = 0;
    bool infinite = false;

    static Valuation inf() { return Valuation{0, true}; }
    static Valuation of(long k) { return Valuation{k, false}; }

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool operator<(const Valuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return v < o.v;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>=(const Valuation& o) const { return !(*this < o); }
    bool operator>(const Valuation& o) const { return o < *this; }

    std::string str() const { return infinite ? "+inf" : std::to_string(v); }
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

// Exact exponent of p in a nonzero integer.
inline long val_p(BigInt x, long p) {
    if (x == 0) throw std::domain_error("val_p: zero integer has infinite valuation");
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// val_p(x) for a rational, +inf iff x = 0.
inline Valuation val_p(const Rational& x, long p) {
    if (x == 0) return Valuation::inf();
    long v = val_p(numerator(x), p);
    BigInt den = denominator(x);
    if (den != 1) v -= val_p(den, p);
    return Valuation::of(v);
}

inline BigInt pow_int(BigInt base, unsigned long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline BigInt pow_int(long base, unsigned long e) { return pow_int(BigInt(base), e); }

// x mod m normalized into [0, m).
inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

// Inverse of x mod m for gcd(x, m) = 1 (extended Euclid).
inline BigInt inv_mod(const BigInt& x, const BigInt& m) {
    BigInt a = mod_floor(x, m), b = m;
    BigInt u0 = 1, u1 = 0;
    while (b != 0) {
        BigInt q = a / b;
        BigInt t = a - q * b;
        a = b;
        b = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
    }
    if (a != 1) throw std::domain_error("inv_mod: not a unit");
    return mod_floor(u0, m);
}

// Reduce a rational with p-unit denominator mod p^M, into [0, p^M).
inline BigInt rational_mod(const Rational& q, const BigInt& pM) {
    BigInt num = mod_floor(numerator(q), pM);
    BigInt den = denominator(q);
    if (den == 1) return num;
    return mod_floor(num * inv_mod(den, pM), pM);
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace slopecert

#pragma once

#include <stdexcept>

#include "slopecert/homog.hpp"

namespace slopecert {

// Canonical coset representative [[p^n, b], [0, 1]] of G/KZ: a tree vertex.
// b is a rational with p-power denominator, reduced mod p^n into [0, p^n).
struct CosetRep {
    long n = 0;
    Rational b = 0;

    bool operator==(const CosetRep& o) const { return n == o.n && b == o.b; }
    bool operator<(const CosetRep& o) const {
        if (n != o.n) return n < o.n;
        return b < o.b;
    }

    Mat2Q matrix(long p) const {
        if (n >= 0) return {Rational(pow_int(p, n)), b, Rational(0), Rational(1)};
        return {Rational(1, pow_int(p, -n)), b, Rational(0), Rational(1)};
    }
    std::string str() const;
};

// g = rep * h with h in KZ (h has p-power determinant up to units and becomes
// integral with unit determinant after stripping its central p-power).
struct CosetFactorization {
    CosetRep rep;
    Mat2Q h;          // exact KZ factor
    Mat2<BigInt> k;   // h with the central p-power stripped; integer entries
};

// Reduce b mod p^n Z_p into the canonical range.
Rational reduce_b_mod(const Rational& b, long p, long n);

CosetFactorization canonicalize(long p, const Mat2Q& g);

}  // namespace slopecert

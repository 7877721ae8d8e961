#pragma once

#include <vector>

#include "slopecert/bigint.hpp"

namespace slopecert {

// Generalized binomial coefficient m(m-1)...(m-k+1)/k! for any integer m;
// 0 when k < 0.  Always an integer.
BigInt binom_int(const BigInt& m, long k);
inline BigInt binom_int(long m, long k) { return binom_int(BigInt(m), k); }

// Falling factorial m_k = m(m-1)...(m-k+1); 1 when k = 0.
BigInt falling_factorial(const BigInt& m, long k);
inline BigInt falling_factorial(long m, long k) { return falling_factorial(BigInt(m), k); }

BigInt factorial(long n);

// Signed Stirling number of the first kind: coefficient of X^k in X_n.
BigInt stirling1(long n, long k);

// Stirling number of the second kind: X^n = sum_k s2(n,k) X_k.
BigInt stirling2(long n, long k);

// M_{u,n} = sum_i binom(u, i(p-1)+n) over all integers i, for u >= 0.
BigInt bigM(long u, long n, long p);

// Residue of h mod p-1 normalized into {1,...,p-1}.
inline long more_residue(long h, long p) {
    long m = ((h % (p - 1)) + (p - 1)) % (p - 1);
    return m == 0 ? p - 1 : m;
}

// Residue of h mod p-1 normalized into {0,...,p-2}.
inline long less_residue(long h, long p) {
    return ((h % (p - 1)) + (p - 1)) % (p - 1);
}

}  // namespace slopecert

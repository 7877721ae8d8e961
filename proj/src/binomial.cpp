#include "slopecert/binomial.hpp"

#include <stdexcept>

namespace slopecert {

BigInt binom_int(const BigInt& m, long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (long i = 0; i < k; ++i) num *= m - i;
    return num / factorial(k);
}

BigInt falling_factorial(const BigInt& m, long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: k < 0");
    BigInt r = 1;
    for (long i = 0; i < k; ++i) r *= m - i;
    return r;
}

BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt stirling1(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling1: negative index");
    if (k > n) return 0;
    // X_{n+1} = X_n (X - n): s1(n+1,k) = s1(n,k-1) - n s1(n,k)
    std::vector<BigInt> row(1, BigInt(1));
    for (long m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, BigInt(0));
        for (long j = 0; j < m; ++j) {
            next[j + 1] += row[j];
            next[j] -= (m - 1) * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

BigInt stirling2(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative index");
    if (k > n) return 0;
    std::vector<BigInt> row(1, BigInt(1));
    for (long m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, BigInt(0));
        for (long j = 0; j < m; ++j) {
            next[j + 1] += row[j];
            next[j] += j * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

BigInt bigM(long u, long n, long p) {
    if (u < 0) throw std::invalid_argument("bigM: u < 0");
    // nonzero terms have 0 <= i(p-1)+n <= u, i.e. j ≡ n mod p-1 in [0, u]
    long j0 = ((n % (p - 1)) + (p - 1)) % (p - 1);
    BigInt total = 0;
    for (long j = j0; j <= u; j += p - 1) total += binom_int(u, j);
    return total;
}

}  // namespace slopecert

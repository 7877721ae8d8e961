#include "slopecert/truncated.hpp"

namespace slopecert {

TruncatedPadic teichmuller(const Fp& mu, long M) {
    long p = mu.prime();
    BigInt pM = pow_int(p, M);
    BigInt x = mu.value();
    if (x == 0) return TruncatedPadic(p, M, 0);
    // x ← x^p converges to the (p-1)-th root of unity congruent to mu;
    // each step at least doubles the precision, M steps are always enough.
    for (long i = 0; i < M; ++i) {
        BigInt next = 1;
        BigInt base = x;
        long e = p;
        while (e) {
            if (e & 1) next = next * base % pM;
            base = base * base % pM;
            e >>= 1;
        }
        if (next == x) break;
        x = next;
    }
    return TruncatedPadic(p, M, x);
}

BigInt teichmuller_int(long p, long mu, long M) {
    mu = ((mu % p) + p) % p;
    if (mu == p - 1) return BigInt(-1);
    return teichmuller(Fp(p, mu), M).residue();
}

}  // namespace slopecert

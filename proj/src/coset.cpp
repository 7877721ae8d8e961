#include "slopecert/coset.hpp"

#include <sstream>

namespace slopecert {

std::string CosetRep::str() const {
    std::ostringstream os;
    os << "(" << n << "," << b.str() << ")";
    return os.str();
}

namespace {

long val_or_large(const Rational& x, long p) {
    Valuation v = val_p(x, p);
    return v.infinite ? std::numeric_limits<long>::max() / 2 : v.v;
}

void require_p_power_denominator(const Rational& x, long p) {
    BigInt den = denominator(x);
    while (den % p == 0) den /= p;
    if (den != 1)
        throw std::domain_error(
            "coset: matrix entry outside Z[1/p]; group elements must have "
            "p-power denominators");
}

}  // namespace

Rational reduce_b_mod(const Rational& b, long p, long n) {
    if (b == 0) return Rational(0);
    require_p_power_denominator(b, p);
    long vb = val_or_large(b, p);
    if (vb >= n) return Rational(0);
    long d = std::max<long>(0, -vb);
    // b = x / p^d with x an integer
    BigInt x = numerator(b) * (pow_int(p, d) / denominator(b));
    BigInt mod = pow_int(p, n + d);
    return Rational(mod_floor(x, mod), pow_int(p, d));
}

CosetFactorization canonicalize(long p, const Mat2Q& g) {
    for (const Rational* e : {&g.a, &g.b, &g.c, &g.d}) require_p_power_denominator(*e, p);
    if (g.det() == 0) throw std::domain_error("coset: singular matrix");

    Mat2Q w = g;
    // ensure the bottom-left entry can be cleared against the bottom-right
    if (w.d == 0 || (w.c != 0 && val_or_large(w.c, p) < val_or_large(w.d, p))) {
        w = Mat2Q{w.b, w.a, w.d, w.c};  // column swap, an element of K
    }
    if (w.c != 0) {
        Rational q = w.c / w.d;  // v_p >= 0, so [[1,0],[-q,1]] is in K
        w = Mat2Q{w.a - w.b * q, w.b, Rational(0), w.d};
    }
    // w = [[A, B], [0, D]] with A, D nonzero
    long n = val_or_large(w.a, p) - val_or_large(w.d, p);
    Rational b = reduce_b_mod(w.b / w.d, p, n);

    CosetRep rep{n, b};
    Mat2Q repm = rep.matrix(p);
    Rational pn = repm.a;
    // rep^{-1} = [[p^-n, -b p^-n], [0, 1]]
    Mat2Q repinv{Rational(1) / pn, -b / pn, Rational(0), Rational(1)};
    Mat2Q h = repinv * g;

    long m = std::min(std::min(val_or_large(h.a, p), val_or_large(h.b, p)),
                      std::min(val_or_large(h.c, p), val_or_large(h.d, p)));
    Rational scale(pow_int(p, std::abs(m)));
    Mat2Q k = h;
    if (m > 0) {
        k = Mat2Q{h.a / scale, h.b / scale, h.c / scale, h.d / scale};
    } else if (m < 0) {
        k = Mat2Q{h.a * scale, h.b * scale, h.c * scale, h.d * scale};
    }
    Valuation dv = val_p(k.det(), p);
    if (dv.infinite || dv.v != 0)
        throw std::logic_error("coset: KZ factor failed the unit-determinant check");
    for (const Rational* e : {&k.a, &k.b, &k.c, &k.d})
        if (denominator(*e) != 1) throw std::logic_error("coset: KZ factor not integral");

    Mat2<BigInt> ki{numerator(k.a), numerator(k.b), numerator(k.c), numerator(k.d)};
    return {rep, h, ki};
}

}  // namespace slopecert

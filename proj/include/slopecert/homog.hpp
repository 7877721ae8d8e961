#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "slopecert/binomial.hpp"
#include "slopecert/eisenstein.hpp"
#include "slopecert/prime_field.hpp"

namespace slopecert {

// Minimal ring glue so HomogPoly can run over F_p, Q, and the Eisenstein ring.
inline Rational ring_zero_like(const Rational&) { return Rational(0); }
inline Fp ring_zero_like(const Fp& x) { return Fp(x.prime(), 0); }
inline EisElem ring_zero_like(const EisElem& x) {
    return EisElem::zero(x.prime(), x.ramification(), x.digit_precision());
}
inline Rational ring_from_int(const Rational&, const BigInt& n) { return Rational(n); }
inline Fp ring_from_int(const Fp& x, const BigInt& n) { return Fp(x.prime(), n); }
inline EisElem ring_from_int(const EisElem& x, const BigInt& n) {
    return EisElem::from_int(x.prime(), x.ramification(), x.digit_precision(), n);
}
inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const Fp& x) { return x.is_zero(); }
inline bool ring_is_zero(const EisElem& x) { return x.is_zero_repr(); }

template <class R>
struct Mat2 {
    R a, b, c, d;  // [[a, b], [c, d]]

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    R det() const { return a * d - b * c; }
};

using Mat2Q = Mat2<Rational>;

// Homogeneous polynomial of degree r in x, y; index j holds the coefficient
// of x^j y^{r-j}.
template <class R>
class HomogPoly {
public:
    HomogPoly() = default;
    HomogPoly(long degree, const R& proto)
        : r_(degree), c_(degree + 1, ring_zero_like(proto)) {
        if (degree < 0) throw std::invalid_argument("HomogPoly: negative degree");
    }

    long degree() const { return r_; }
    const R& coeff(long j) const { return c_.at(j); }
    R& coeff(long j) { return c_.at(j); }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!ring_is_zero(x)) return false;
        return true;
    }

    HomogPoly operator+(const HomogPoly& o) const {
        check(o);
        HomogPoly r = *this;
        for (long j = 0; j <= r_; ++j) r.c_[j] = r.c_[j] + o.c_[j];
        return r;
    }
    HomogPoly operator-(const HomogPoly& o) const {
        check(o);
        HomogPoly r = *this;
        for (long j = 0; j <= r_; ++j) r.c_[j] = r.c_[j] - o.c_[j];
        return r;
    }
    HomogPoly operator*(const R& s) const {
        HomogPoly r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    // Product of homogeneous polynomials (degrees add).
    HomogPoly operator*(const HomogPoly& o) const {
        HomogPoly r(r_ + o.r_, c_.empty() ? o.c_.front() : c_.front());
        for (long i = 0; i <= r_; ++i) {
            if (ring_is_zero(c_[i])) continue;
            for (long j = 0; j <= o.r_; ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        return r;
    }

private:
    void check(const HomogPoly& o) const {
        if (r_ != o.r_) throw std::invalid_argument("HomogPoly: degree mismatch");
    }
    long r_ = 0;
    std::vector<R> c_;
};

// Substitution action v(g1 x + g3 y, g2 x + g4 y).
template <class R>
HomogPoly<R> kz_act(const Mat2<R>& g, const HomogPoly<R>& v) {
    long r = v.degree();
    const R zero = ring_zero_like(g.a);
    const R one = ring_from_int(g.a, 1);
    HomogPoly<R> out(r, zero);
    if (v.is_zero()) return out;

    if (ring_is_zero(g.c)) {
        // upper triangular fast path: (g1 x)^j (g2 x + g4 y)^{r-j}
        // powers of g1, g2, g4 built incrementally
        std::vector<R> pow_a(r + 1, one), pow_b(r + 1, one), pow_d(r + 1, one);
        for (long i = 1; i <= r; ++i) {
            pow_a[i] = pow_a[i - 1] * g.a;
            pow_b[i] = pow_b[i - 1] * g.b;
            pow_d[i] = pow_d[i - 1] * g.d;
        }
        for (long j = 0; j <= r; ++j) {
            if (ring_is_zero(v.coeff(j))) continue;
            long k = r - j;  // expand (g2 x + g4 y)^k
            for (long z = 0; z <= k; ++z) {
                // x^{j + (k-z)} y^z term
                R term = v.coeff(j) * pow_a[j] * pow_b[k - z] * pow_d[z] *
                         ring_from_int(g.a, binom_int(k, z));
                out.coeff(j + k - z) = out.coeff(j + k - z) + term;
            }
        }
        return out;
    }

    // general case: build powers of the two linear forms
    std::vector<std::vector<R>> pow1(r + 1), pow2(r + 1);
    pow1[0] = {one};
    pow2[0] = {one};
    for (long i = 1; i <= r; ++i) {
        pow1[i].assign(i + 1, zero);
        pow2[i].assign(i + 1, zero);
        for (long j = 0; j < i; ++j) {
            pow1[i][j] = pow1[i][j] + pow1[i - 1][j] * g.c;      // y part of g1 x + g3 y
            pow1[i][j + 1] = pow1[i][j + 1] + pow1[i - 1][j] * g.a;
            pow2[i][j] = pow2[i][j] + pow2[i - 1][j] * g.d;
            pow2[i][j + 1] = pow2[i][j + 1] + pow2[i - 1][j] * g.b;
        }
    }
    for (long j = 0; j <= r; ++j) {
        if (ring_is_zero(v.coeff(j))) continue;
        const auto& f1 = pow1[j];
        const auto& f2 = pow2[r - j];
        for (size_t a = 0; a < f1.size(); ++a)
            for (size_t b = 0; b < f2.size(); ++b) {
                long xdeg = static_cast<long>(a + b);
                out.coeff(xdeg) = out.coeff(xdeg) + v.coeff(j) * f1[a] * f2[b];
            }
    }
    return out;
}

// theta = x y^p - x^p y
template <class R>
HomogPoly<R> theta_poly(long p, const R& proto) {
    HomogPoly<R> t(p + 1, proto);
    t.coeff(1) = ring_from_int(proto, 1);
    t.coeff(p) = ring_from_int(proto, -1);
    return t;
}

// theta^n * x^a * y^b expanded: sum_j (-1)^j binom(n,j) x^{a+n-j+jp} y^{b+p(n-j)+j}.
// a or b may be negative as long as every monomial exponent is nonnegative.
template <class R>
HomogPoly<R> theta_power_monomial(long p, long n, long a, long b, const R& proto) {
    long degree = a + b + n * (p + 1);
    HomogPoly<R> out(degree, proto);
    for (long j = 0; j <= n; ++j) {
        long xe = a + n - j + j * p;
        long ye = b + p * (n - j) + j;
        if (xe < 0 || ye < 0)
            throw std::invalid_argument("theta_power_monomial: negative exponent");
        BigInt c = binom_int(n, j);
        if (j % 2 != 0) c = -c;
        out.coeff(xe) = out.coeff(xe) + ring_from_int(proto, c);
    }
    return out;
}

// Exact division by theta once: f = theta * h.  Returns nothing when theta
// does not divide f.
template <class R>
std::optional<HomogPoly<R>> theta_divide_once(long p, const HomogPoly<R>& f) {
    long r = f.degree();
    if (r < p + 1) return std::nullopt;
    long d = r - (p + 1);
    const R zero = ring_zero_like(f.coeff(0));
    HomogPoly<R> h(d, zero);
    // f_j = h_{j-1} - h_{j-p} gives h_{j-1} = f_j + h_{j-p}
    for (long j = 1; j <= d + 1; ++j) {
        R v = f.coeff(j);
        if (j - p >= 0 && j - p <= d) v = v + h.coeff(j - p);
        h.coeff(j - 1) = v;
    }
    HomogPoly<R> back = theta_poly(p, zero) * h;
    for (long j = 0; j <= r; ++j)
        if (!ring_is_zero(back.coeff(j) - f.coeff(j))) return std::nullopt;
    return h;
}

// Divide by theta^alpha; remainder flag is the failure of exact division.
template <class R>
std::pair<HomogPoly<R>, bool> theta_pow_divide(long p, const HomogPoly<R>& f, long alpha) {
    HomogPoly<R> cur = f;
    for (long t = 0; t < alpha; ++t) {
        auto q = theta_divide_once(p, cur);
        if (!q) return {cur, true};
        cur = *q;
    }
    return {cur, false};
}

}  // namespace slopecert

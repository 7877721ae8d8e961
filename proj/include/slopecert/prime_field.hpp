#pragma once

#include <stdexcept>
#include <vector>

#include "slopecert/bigint.hpp"

namespace slopecert {

// Element of F_p, p a (small) odd prime carried by the element.
class Fp {
public:
    Fp() = default;
    Fp(long p, long value) : p_(p) { v_ = ((value % p) + p) % p; }
    Fp(long p, const BigInt& value) : p_(p) {
        v_ = static_cast<long>(mod_floor(value, BigInt(p)));
    }

    long prime() const { return p_; }
    long value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { return with(v_ + o.check(p_).v_); }
    Fp operator-(const Fp& o) const { return with(v_ - o.check(p_).v_ + p_); }
    Fp operator*(const Fp& o) const { return with(v_ * o.check(p_).v_); }
    Fp operator-() const { return with(p_ - v_); }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        long r = 1, b = v_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return Fp(p_, r);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp pow(long e) const {
        long m = (p_ - 1);
        long ee = ((e % m) + m) % m;  // v_ != 0 case; 0^0 = 1 handled below
        if (v_ == 0) {
            if (e == 0) return Fp(p_, 1);
            if (e < 0) throw std::domain_error("Fp: negative power of zero");
            return Fp(p_, 0);
        }
        Fp r(p_, 1), b = *this;
        while (ee) {
            if (ee & 1) r = r * b;
            b = b * b;
            ee >>= 1;
        }
        return r;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    Fp with(long raw) const { return Fp(p_, raw % p_); }
    const Fp& check(long p) const {
        if (p_ != p) throw std::invalid_argument("Fp: mixed primes");
        return *this;
    }

    long p_ = 2;
    long v_ = 0;
};

// Reduction of an exact rational with p-integral denominator.
inline Fp reduce_mod_p(const Rational& q, long p) {
    BigInt num = mod_floor(numerator(q), BigInt(p));
    BigInt den = denominator(q);
    if (den == 1) return Fp(p, num);
    BigInt d = mod_floor(den, BigInt(p));
    if (d == 0) throw std::domain_error("reduce_mod_p: denominator not a p-unit");
    return Fp(p, mod_floor(num * inv_mod(d, BigInt(p)), BigInt(p)));
}

}  // namespace slopecert

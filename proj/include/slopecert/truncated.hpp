#pragma once

#include <stdexcept>

#include "slopecert/bigint.hpp"
#include "slopecert/prime_field.hpp"

namespace slopecert {

// Element of Z/p^M with the precision M carried along.  Arithmetic mixes
// precisions by truncating to the smaller one; division is defined only by
// units, callers scale powers of p out explicitly.
class TruncatedPadic {
public:
    TruncatedPadic() = default;
    TruncatedPadic(long p, long precision, const BigInt& residue)
        : p_(p), M_(precision), pM_(pow_int(p, precision)) {
        if (precision < 1) throw std::invalid_argument("TruncatedPadic: precision < 1");
        r_ = mod_floor(residue, pM_);
    }

    long prime() const { return p_; }
    long precision() const { return M_; }
    const BigInt& residue() const { return r_; }
    const BigInt& modulus() const { return pM_; }
    bool is_zero() const { return r_ == 0; }

    TruncatedPadic operator+(const TruncatedPadic& o) const {
        return combine(o, r_ + o.r_);
    }
    TruncatedPadic operator-(const TruncatedPadic& o) const {
        return combine(o, r_ - o.r_);
    }
    TruncatedPadic operator*(const TruncatedPadic& o) const {
        return combine(o, r_ * o.r_);
    }
    TruncatedPadic operator-() const { return TruncatedPadic(p_, M_, pM_ - r_); }

    bool is_unit() const { return r_ % p_ != 0; }

    TruncatedPadic inverse() const {
        if (!is_unit()) throw std::domain_error("TruncatedPadic: inverse of non-unit");
        return TruncatedPadic(p_, M_, inv_mod(r_, pM_));
    }
    TruncatedPadic operator/(const TruncatedPadic& o) const { return *this * o.inverse(); }

    // Valuation of the residue; "≥ M" is reported through Valuation::inf-like
    // semantics: a zero residue only tells us val ≥ M.
    Valuation valuation_lower_bound() const {
        if (r_ == 0) return Valuation::of(M_);
        return Valuation::of(val_p(r_, p_));
    }
    bool valuation_known() const { return r_ != 0; }

    TruncatedPadic truncate(long newM) const {
        if (newM > M_) throw std::invalid_argument("TruncatedPadic: cannot raise precision");
        return TruncatedPadic(p_, newM, r_);
    }

    bool operator==(const TruncatedPadic& o) const {
        return p_ == o.p_ && M_ == o.M_ && r_ == o.r_;
    }

private:
    TruncatedPadic combine(const TruncatedPadic& o, const BigInt& raw) const {
        if (p_ != o.p_) throw std::invalid_argument("TruncatedPadic: mixed primes");
        long M = std::min(M_, o.M_);
        return TruncatedPadic(p_, M, raw);
    }

    long p_ = 2;
    long M_ = 1;
    BigInt pM_ = 2;
    BigInt r_ = 0;
};

// Teichmüller lift of mu ∈ F_p to Z/p^M: the fixed point of x ← x^p.
TruncatedPadic teichmuller(const Fp& mu, long M);

// Integer representative in [0, p^M) of the Teichmüller lift, with the single
// exact case [p-1] = -1 mapped to -1 so that sums like 1 + [mu] keep their
// exact valuation.
BigInt teichmuller_int(long p, long mu, long M);

// Embed a p-integral rational into Z/p^M.
inline TruncatedPadic embed(const Rational& q, long p, long M) {
    Valuation v = val_p(q, p);
    if (!v.infinite && v.v < 0)
        throw std::domain_error("embed: negative valuation rational");
    return TruncatedPadic(p, M, rational_mod(q, pow_int(p, M)));
}

}  // namespace slopecert

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "slopecert/bigint.hpp"
#include "slopecert/truncated.hpp"

namespace slopecert {

// Element of (Z/p^M)[pi]/(pi^e - p), stored as pi^scale * (d_0 + d_1 pi + ...
// + d_{e-1} pi^{e-1}) with digits mod p^M.  The value is known modulo
// pi^aprec (absolute precision in pi-units); aprec never exceeds the
// representation capacity scale + e*M.  Valuations live in (1/e)Z.
//
// e = 1 degenerates to plain truncated p-adic arithmetic with an explicit
// power-of-p scale, which is how negative-valuation coefficients enter the
// Hecke computations.
class EisElem {
public:
    EisElem() = default;

    static EisElem zero(long p, int e, long M) {
        EisElem x;
        x.init(p, e, M, 0);
        return x;
    }

    static EisElem from_int(long p, int e, long M, const BigInt& n) {
        EisElem x = zero(p, e, M);
        x.d_[0] = mod_floor(n, x.pM_);
        return x;
    }

    // Rational with p-power denominator: a / p^k becomes pi^{-ek} * a.
    static EisElem from_rational(long p, int e, long M, const Rational& q) {
        BigInt den = denominator(q);
        long k = den == 1 ? 0 : val_p(den, p);
        if (den != pow_int(p, k))
            throw std::domain_error("EisElem: denominator is not a power of p");
        EisElem x = zero(p, e, M);
        x.scale_ -= e * k;
        x.aprec_ -= e * k;
        x.d_[0] = mod_floor(numerator(q), x.pM_);
        return x;
    }

    static EisElem pi_pow(long p, int e, long M, long k) {
        EisElem x = zero(p, e, M);
        x.d_[0] = 1;
        x.scale_ += k;
        x.aprec_ += k;
        return x;
    }

    long prime() const { return p_; }
    int ramification() const { return e_; }
    long digit_precision() const { return M_; }
    long scale() const { return scale_; }
    long abs_precision() const { return aprec_; }
    const std::vector<BigInt>& digits() const { return d_; }

    EisElem operator+(const EisElem& o) const {
        auto [a, b] = aligned(o);
        for (int i = 0; i < a.e_; ++i) a.d_[i] = mod_floor(a.d_[i] + b.d_[i], a.pM_);
        a.aprec_ = std::min(a.aprec_, b.aprec_);
        return a;
    }
    EisElem operator-(const EisElem& o) const {
        auto [a, b] = aligned(o);
        for (int i = 0; i < a.e_; ++i) a.d_[i] = mod_floor(a.d_[i] - b.d_[i], a.pM_);
        a.aprec_ = std::min(a.aprec_, b.aprec_);
        return a;
    }
    EisElem operator-() const {
        EisElem x = *this;
        for (auto& di : x.d_) di = mod_floor(-di, pM_);
        return x;
    }

    EisElem operator*(const EisElem& o) const {
        check_ring(o);
        EisElem r = zero(p_, e_, M_);
        std::vector<BigInt> conv(2 * e_ - 1, BigInt(0));
        for (int i = 0; i < e_; ++i) {
            if (d_[i] == 0) continue;
            for (int j = 0; j < e_; ++j) conv[i + j] += d_[i] * o.d_[j];
        }
        for (int k = 2 * e_ - 2; k >= e_; --k) conv[k - e_] += p_ * conv[k];
        for (int i = 0; i < e_; ++i) r.d_[i] = mod_floor(conv[i], pM_);
        r.scale_ = scale_ + o.scale_;
        // scale_ is a lower bound on each factor's valuation
        r.aprec_ = std::min({aprec_ + o.scale_, o.aprec_ + scale_, r.scale_ + e_ * M_});
        return r;
    }

    EisElem mul_int(const BigInt& n) const { return *this * from_int(p_, e_, M_, n); }
    EisElem mul_rational(const Rational& q) const {
        return *this * from_rational(p_, e_, M_, q);
    }

    bool is_zero_repr() const {
        for (const auto& di : d_)
            if (di != 0) return false;
        return true;
    }

    // Valuation in pi-units, capped at the absolute precision.  known = false
    // means only "val >= aprec" can be asserted.
    std::pair<long, bool> val_pi() const {
        long best = aprec_;
        for (int i = 0; i < e_; ++i) {
            if (d_[i] == 0) continue;
            long v = scale_ + i + e_ * val_p(d_[i], p_);
            best = std::min(best, v);
        }
        if (best >= aprec_) return {aprec_, false};
        return {best, true};
    }

    // Exact valuation as a rational number of p-units; throws when the
    // element is indistinguishable from zero at the current precision.
    Rational valuation() const {
        auto [v, known] = val_pi();
        if (!known) throw std::domain_error("EisElem: valuation below precision");
        return Rational(v, e_);
    }

    bool is_unit() const {
        auto [v, known] = val_pi();
        return known && v == 0;
    }

    EisElem inverse() const {
        auto [v, known] = val_pi();
        if (!known || v != 0) throw std::domain_error("EisElem: inverse of non-unit");
        EisElem u = *this;
        u.shift_to_scale(0);
        EisElem x = zero(p_, e_, M_);
        x.d_[0] = inv_mod(u.d_[0], pM_);
        EisElem two = from_int(p_, e_, M_, 2);
        // Newton iteration doubles the number of correct pi-digits.
        long need = e_ * M_, have = 1;
        while (have < need) {
            x = x * (two - u * x);
            x.aprec_ = e_ * M_;  // relative precision is preserved by inversion
            have *= 2;
        }
        x.aprec_ = std::min(aprec_ - 2 * v, e_ * M_);
        return x;
    }
    EisElem operator/(const EisElem& o) const { return *this * o.inverse(); }

    // True iff the value is 0 modulo pi^bound; requires aprec >= bound.
    bool vanishes_mod_pi(long bound) const {
        if (aprec_ < bound)
            throw std::domain_error("EisElem: precision exhausted below requested bound");
        auto [v, known] = val_pi();
        return !known || v >= bound;
    }

    bool congruent(const EisElem& o, long bound_pi) const {
        return (*this - o).vanishes_mod_pi(bound_pi);
    }

    // Digits of the value itself (scale folded in); defined for val >= 0.
    TruncatedPadic to_truncated() const {
        if (e_ != 1) throw std::domain_error("EisElem: to_truncated needs e = 1");
        if (scale_ < 0 && !is_zero_repr())
            throw std::domain_error("EisElem: negative-valuation value");
        EisElem u = *this;
        u.shift_to_scale(0);
        long M = std::min<long>(M_, std::max<long>(aprec_, 1));
        return TruncatedPadic(p_, M, u.d_[0]);
    }

private:
    void init(long p, int e, long M, long scale) {
        if (e < 1) throw std::invalid_argument("EisElem: ramification < 1");
        if (M < 1) throw std::invalid_argument("EisElem: precision < 1");
        p_ = p;
        e_ = e;
        M_ = M;
        pM_ = pow_int(p, M);
        scale_ = scale;
        aprec_ = scale + e * M;
        d_.assign(e, BigInt(0));
    }

    void check_ring(const EisElem& o) const {
        if (p_ != o.p_ || e_ != o.e_ || M_ != o.M_)
            throw std::invalid_argument("EisElem: mixed rings");
    }

    // Rewrite to a smaller scale (multiplies digit vector by pi^(scale - s)).
    void shift_to_scale(long s) {
        if (s > scale_) throw std::logic_error("EisElem: cannot raise scale");
        long k = scale_ - s;
        for (long t = 0; t < k; ++t) {
            BigInt top = d_[e_ - 1];
            for (int i = e_ - 1; i > 0; --i) d_[i] = d_[i - 1];
            d_[0] = mod_floor(top * p_, pM_);
        }
        scale_ = s;
    }

    std::pair<EisElem, EisElem> aligned(const EisElem& o) const {
        check_ring(o);
        EisElem a = *this, b = o;
        long s = std::min(a.scale_, b.scale_);
        a.shift_to_scale(s);
        b.shift_to_scale(s);
        long cap = s + e_ * M_;
        a.aprec_ = std::min(a.aprec_, cap);
        b.aprec_ = std::min(b.aprec_, cap);
        return {a, b};
    }

    long p_ = 2;
    int e_ = 1;
    long M_ = 1;
    BigInt pM_ = 2;
    long scale_ = 0;
    long aprec_ = 1;
    std::vector<BigInt> d_;
};

// A concrete trace parameter a = unit * pi^j of valuation j/e.
EisElem eisenstein_make_a(long p, int e, long M, long j);

}  // namespace slopecert

#pragma once

#include <stdexcept>
#include <vector>

#include "slopecert/homog.hpp"

namespace slopecert {

// Formal det-power twist tag; acts trivially on everything we verify but is
// tracked so compositions stay honest.
struct Twist {
    long m = 0;
    Twist operator+(const Twist& o) const { return {m + o.m}; }
    bool operator==(const Twist& o) const = default;
};

// Degree-h homogeneous function F_p^2 \ {0} -> F_p, stored as a full value
// table.  Index (u, v) at u*p + v; the origin slot is unused.
class FunctionSpaceElement {
public:
    FunctionSpaceElement(long p, long h)
        : p_(p), h_(h), table_(p * p, Fp(p, 0)) {}

    long prime() const { return p_; }
    long h() const { return h_; }

    Fp get(long u, long v) const { return table_[idx(u, v)]; }
    void set(long u, long v, const Fp& x) {
        if (u == 0 && v == 0) throw std::invalid_argument("I_h: origin is excluded");
        table_[idx(u, v)] = x;
    }

    bool is_homogeneous() const {
        for (long lam = 1; lam < p_; ++lam) {
            Fp scale = Fp(p_, lam).pow(h_);
            for (long u = 0; u < p_; ++u)
                for (long v = 0; v < p_; ++v) {
                    if (u == 0 && v == 0) continue;
                    if (!(get(lam * u % p_, lam * v % p_) == scale * get(u, v)))
                        return false;
                }
        }
        return true;
    }

    bool is_zero() const {
        for (long u = 0; u < p_; ++u)
            for (long v = 0; v < p_; ++v)
                if (!(u == 0 && v == 0) && !get(u, v).is_zero()) return false;
        return true;
    }

    FunctionSpaceElement operator+(const FunctionSpaceElement& o) const {
        FunctionSpaceElement r = *this;
        for (size_t i = 0; i < table_.size(); ++i) r.table_[i] = r.table_[i] + o.table_[i];
        return r;
    }
    FunctionSpaceElement operator*(const Fp& s) const {
        FunctionSpaceElement r = *this;
        for (auto& x : r.table_) x = x * s;
        return r;
    }
    bool operator==(const FunctionSpaceElement& o) const {
        return p_ == o.p_ && table_ == o.table_;
    }

    // A polynomial of degree d ≡ h mod p-1 is a function with the right
    // homogeneity; this is the inclusion sigma_{<h>} ⊂ I_h when d = <h>.
    static FunctionSpaceElement from_poly(const HomogPoly<Fp>& f, long h) {
        long p = f.coeff(0).prime();
        if (less_residue(f.degree() - h, p) != 0)
            throw std::invalid_argument("I_h: polynomial degree incompatible with h");
        FunctionSpaceElement out(p, h);
        for (long u = 0; u < p; ++u)
            for (long v = 0; v < p; ++v) {
                if (u == 0 && v == 0) continue;
                Fp val(p, 0);
                for (long j = 0; j <= f.degree(); ++j) {
                    if (f.coeff(j).is_zero()) continue;
                    val = val + f.coeff(j) * Fp(p, u).pow(j) * Fp(p, v).pow(f.degree() - j);
                }
                out.set(u, v, val);
            }
        return out;
    }

    // (alpha f)(x, y) = f((x, y) alpha)
    FunctionSpaceElement acted(const Mat2<Fp>& g) const {
        FunctionSpaceElement out(p_, h_);
        for (long u = 0; u < p_; ++u)
            for (long v = 0; v < p_; ++v) {
                if (u == 0 && v == 0) continue;
                long uu = (u * g.a.value() + v * g.c.value()) % p_;
                long vv = (u * g.b.value() + v * g.d.value()) % p_;
                out.set(u, v, get(uu, vv));
            }
        return out;
    }

    // Basis of I_h: one function per projective point, supported on its
    // F_p^x-orbit with value lambda^h on lambda * rep.
    static std::vector<FunctionSpaceElement> basis(long p, long h);

private:
    size_t idx(long u, long v) const {
        u = ((u % p_) + p_) % p_;
        v = ((v % p_) + p_) % p_;
        return static_cast<size_t>(u * p_ + v);
    }
    long p_;
    long h_;
    std::vector<Fp> table_;
};

// The club map f |-> sum_{u,v} f(u,v) (vX - uY)^{<-h>_floor} into
// sigma_{floor(-h)}(h); kernel is exactly sigma_{<h>}.
std::pair<HomogPoly<Fp>, Twist> club_map(const FunctionSpaceElement& f);

// Class of f in N_alpha = theta^alpha Sigma_{r-alpha(p+1)} / theta^{alpha+1}(...),
// compared against the reference generator theta^alpha x^{p-1} y^{r-alpha(p+1)-p+1}.
// Returns (true, c) iff the class equals c times the reference with c != 0.
std::pair<bool, Fp> n_alpha_class(const HomogPoly<Fp>& f, long alpha, long r);

// Dual-route divisibility criterion: the vanishing of T_0..T_{alpha-1} on D
// (standard family) against exact division of sum_i D_i x^{i(p-1)+alpha}
// y^{r-i(p-1)-alpha} by theta^alpha.  Both routes are always computed; they
// must agree.  mod_p selects arithmetic in F_p (the reduction setting) or Q.
struct ThetaCriterionResult {
    bool criterion;   // functional vanishing
    bool divisible;   // exact polynomial division succeeded
    bool agree() const { return criterion == divisible; }
};

class CoefficientFamily;
ThetaCriterionResult theta_criterion(const CoefficientFamily& D, long alpha, long r,
                                     long p, bool mod_p = true);

}  // namespace slopecert

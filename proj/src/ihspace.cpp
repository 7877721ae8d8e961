#include "slopecert/ihspace.hpp"

#include "slopecert/family.hpp"

namespace slopecert {

std::vector<FunctionSpaceElement> FunctionSpaceElement::basis(long p, long h) {
    std::vector<FunctionSpaceElement> out;
    std::vector<std::pair<long, long>> reps;
    reps.push_back({1, 0});
    for (long v = 0; v < p; ++v) reps.push_back({v, 1});  // (v : 1), plus (1 : 0)
    for (auto [ru, rv] : reps) {
        FunctionSpaceElement f(p, h);
        for (long lam = 1; lam < p; ++lam)
            f.set(lam * ru % p, lam * rv % p, Fp(p, lam).pow(h));
        out.push_back(std::move(f));
    }
    return out;
}

std::pair<HomogPoly<Fp>, Twist> club_map(const FunctionSpaceElement& f) {
    long p = f.prime();
    long d = less_residue(-f.h(), p);
    HomogPoly<Fp> out(d, Fp(p, 0));
    for (long u = 0; u < p; ++u)
        for (long v = 0; v < p; ++v) {
            if (u == 0 && v == 0) continue;
            Fp fv = f.get(u, v);
            if (fv.is_zero()) continue;
            // (vX - uY)^d: X-degree j has binom(d,j) v^j (-u)^{d-j}
            for (long j = 0; j <= d; ++j) {
                Fp c = fv * Fp(p, binom_int(d, j)) * Fp(p, v).pow(j) *
                       (-Fp(p, u)).pow(d - j);
                out.coeff(j) = out.coeff(j) + c;
            }
        }
    return {out, Twist{f.h()}};
}

std::pair<bool, Fp> n_alpha_class(const HomogPoly<Fp>& f, long alpha, long r) {
    long p = f.coeff(0).prime();
    if (f.degree() != r) throw std::invalid_argument("n_alpha_class: degree mismatch");
    auto [g, rem] = theta_pow_divide(p, f, alpha);
    if (rem) throw std::domain_error("n_alpha_class: f is not divisible by theta^alpha");
    long d = r - alpha * (p + 1);
    // class in N_alpha ≅ I_{r-2alpha}(alpha) is the function cut out by g
    FunctionSpaceElement cls = FunctionSpaceElement::from_poly(g, r - 2 * alpha);
    if (cls.is_zero()) return {false, Fp(p, 0)};

    HomogPoly<Fp> ref(d, Fp(p, 0));
    ref.coeff(p - 1) = Fp(p, 1);  // x^{p-1} y^{d-p+1}
    FunctionSpaceElement ref_cls = FunctionSpaceElement::from_poly(ref, r - 2 * alpha);

    // solve cls = c * ref_cls if possible
    Fp c(p, 0);
    for (long u = 0; u < p && c.is_zero(); ++u)
        for (long v = 0; v < p; ++v) {
            if (u == 0 && v == 0) continue;
            if (!ref_cls.get(u, v).is_zero()) {
                c = cls.get(u, v) / ref_cls.get(u, v);
                break;
            }
        }
    if (c.is_zero()) return {false, Fp(p, 0)};
    if (cls == ref_cls * c) return {true, c};
    return {false, Fp(p, 0)};
}

ThetaCriterionResult theta_criterion(const CoefficientFamily& D, long alpha, long r,
                                     long p, bool mod_p) {
    for (const auto& [i, v] : D.entries())
        if (i < 0 || i * (p - 1) > r - alpha)
            throw std::invalid_argument("theta_criterion: support outside [0, (r-alpha)/(p-1)]");

    NiceFamily fam = NiceFamily::standard(p);
    bool criterion = true;
    for (long w = 0; w < alpha; ++w) {
        Rational t = T_functional(fam, D, w);
        bool zero = mod_p ? reduce_mod_p(t, p).is_zero() : (t == 0);
        if (!zero) criterion = false;
    }

    bool divisible;
    if (mod_p) {
        HomogPoly<Fp> P(r, Fp(p, 0));
        for (const auto& [i, v] : D.entries())
            P.coeff(i * (p - 1) + alpha) = P.coeff(i * (p - 1) + alpha) + reduce_mod_p(v, p);
        divisible = !theta_pow_divide(p, P, alpha).second;
    } else {
        HomogPoly<Rational> P(r, Rational(0));
        for (const auto& [i, v] : D.entries())
            P.coeff(i * (p - 1) + alpha) = P.coeff(i * (p - 1) + alpha) + v;
        divisible = !theta_pow_divide(p, P, alpha).second;
    }
    return {criterion, divisible};
}

}  // namespace slopecert

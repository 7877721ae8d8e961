#include "slopecert/induction.hpp"

#include "slopecert/truncated.hpp"

namespace slopecert {

namespace {

Mat2<EisElem> to_ring(const Mat2<BigInt>& m, const EisElem& proto) {
    return {ring_from_int(proto, m.a), ring_from_int(proto, m.b),
            ring_from_int(proto, m.c), ring_from_int(proto, m.d)};
}

}  // namespace

void InductionElement::add_canonical(const CosetRep& rep, const HomogPoly<EisElem>& v) {
    auto it = terms_.find(rep);
    if (it == terms_.end())
        terms_.emplace(rep, v);
    else
        it->second = it->second + v;
    prune();
}

void InductionElement::add_term(const Mat2Q& g, const HomogPoly<EisElem>& v) {
    CosetFactorization f = canonicalize(p_, g);
    HomogPoly<EisElem> w = kz_act(to_ring(f.k, ring_zero()), v);
    add_canonical(f.rep, w);
}

InductionElement InductionElement::operator+(const InductionElement& o) const {
    InductionElement r = *this;
    r.pruned_aprec_ = std::min(r.pruned_aprec_, o.pruned_aprec_);
    for (const auto& [rep, v] : o.terms_) r.add_canonical(rep, v);
    return r;
}

InductionElement InductionElement::operator-(const InductionElement& o) const {
    InductionElement r = *this;
    r.pruned_aprec_ = std::min(r.pruned_aprec_, o.pruned_aprec_);
    const EisElem minus_one = ring_from_int(ring_zero(), -1);
    for (const auto& [rep, v] : o.terms_) r.add_canonical(rep, v * minus_one);
    return r;
}

InductionElement InductionElement::scaled(const EisElem& s) const {
    InductionElement r(p_, e_, M_, degree_);
    r.pruned_aprec_ = pruned_aprec_ + s.scale();
    for (const auto& [rep, v] : terms_) r.terms_.emplace(rep, v * s);
    r.prune();
    return r;
}

InductionElement InductionElement::acted(const Mat2Q& g) const {
    InductionElement r(p_, e_, M_, degree_);
    r.pruned_aprec_ = pruned_aprec_;
    for (const auto& [rep, v] : terms_) r.add_term(g * rep.matrix(p_), v);
    return r;
}

bool InductionElement::vanishes_mod_pi(long bound) const {
    if (pruned_aprec_ < bound)
        throw std::domain_error("InductionElement: pruned term below requested bound");
    for (const auto& [rep, v] : terms_)
        for (long j = 0; j <= v.degree(); ++j)
            if (!v.coeff(j).vanishes_mod_pi(bound)) return false;
    return true;
}

std::pair<long, bool> InductionElement::min_val_pi() const {
    long best = pruned_aprec_;
    bool known = false;
    for (const auto& [rep, v] : terms_)
        for (long j = 0; j <= v.degree(); ++j) {
            auto [val, k] = v.coeff(j).val_pi();
            if (val < best || (val == best && k)) {
                best = val;
                known = k;
            }
        }
    return {best, known};
}

void InductionElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) {
            for (long j = 0; j <= it->second.degree(); ++j)
                pruned_aprec_ = std::min(pruned_aprec_, it->second.coeff(j).abs_precision());
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

std::vector<BigInt> teichmuller_reps(long p, long M) {
    std::vector<BigInt> reps(p);
    for (long mu = 0; mu < p; ++mu) reps[mu] = teichmuller_int(p, mu, M);
    return reps;
}

InductionElement hecke_T(const InductionElement& elem) {
    long p = elem.prime();
    InductionElement out(p, elem.ramification(), elem.digit_precision(), elem.degree());
    const EisElem zero = elem.ring_zero();
    const EisElem one = ring_from_int(zero, 1);
    auto tm = teichmuller_reps(p, elem.digit_precision());

    for (const auto& [rep, v] : elem.terms()) {
        Mat2Q gamma = rep.matrix(p);
        for (long mu = 0; mu < p; ++mu) {
            Mat2Q m{Rational(p), Rational(tm[mu]), Rational(0), Rational(1)};
            Mat2<EisElem> n{one, ring_from_int(zero, -tm[mu]), zero,
                            ring_from_int(zero, p)};
            out.add_term(gamma * m, kz_act(n, v));
        }
        Mat2Q m_inf{Rational(1), Rational(0), Rational(0), Rational(p)};
        Mat2<EisElem> n_inf{ring_from_int(zero, p), zero, zero, one};
        out.add_term(gamma * m_inf, kz_act(n_inf, v));
    }
    return out;
}

}  // namespace slopecert

#pragma once

#include <map>

#include "slopecert/coset.hpp"
#include "slopecert/eisenstein.hpp"
#include "slopecert/homog.hpp"

namespace slopecert {

// Finite-support element of the compact induction: a formal sum of
// [coset rep, homogeneous polynomial] pairs with Eisenstein-ring
// coefficients.  The central character is trivial (the twisted module), so
// stripping central p-powers during canonicalization is exact.
class InductionElement {
public:
    InductionElement(long p, int e, long M, long degree)
        : p_(p), e_(e), M_(M), degree_(degree) {}

    long prime() const { return p_; }
    int ramification() const { return e_; }
    long digit_precision() const { return M_; }
    long degree() const { return degree_; }

    EisElem ring_zero() const { return EisElem::zero(p_, e_, M_); }
    HomogPoly<EisElem> poly_zero() const { return HomogPoly<EisElem>(degree_, ring_zero()); }

    const std::map<CosetRep, HomogPoly<EisElem>>& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }

    // Merge a term already in canonical position.
    void add_canonical(const CosetRep& rep, const HomogPoly<EisElem>& v);

    // Merge [g, v] after canonicalizing g.
    void add_term(const Mat2Q& g, const HomogPoly<EisElem>& v);

    InductionElement operator+(const InductionElement& o) const;
    InductionElement operator-(const InductionElement& o) const;
    InductionElement scaled(const EisElem& s) const;

    // Left translation by g.
    InductionElement acted(const Mat2Q& g) const;

    // True iff every coefficient of every term is 0 mod pi^bound; throws on
    // insufficient precision.
    bool vanishes_mod_pi(long bound) const;

    // Smallest coefficient valuation across the support (pi-units), paired
    // with whether it is exactly known.
    std::pair<long, bool> min_val_pi() const;

private:
    void prune();

    long p_;
    int e_;
    long M_;
    long degree_;
    long pruned_aprec_ = std::numeric_limits<long>::max() / 4;
    std::map<CosetRep, HomogPoly<EisElem>> terms_;
};

// The Hecke operator for the double coset of diag(p, 1): the p+1 tree
// neighbors of each support vertex, with Teichmueller-lift translations.
InductionElement hecke_T(const InductionElement& elem);

// Teichmueller integer representatives used by T at the element's precision.
std::vector<BigInt> teichmuller_reps(long p, long M);

}  // namespace slopecert

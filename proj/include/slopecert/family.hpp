#pragma once

#include <functional>
#include <map>
#include <string>

#include "slopecert/bigint.hpp"
#include "slopecert/unipoly.hpp"

namespace slopecert {

// Sparse family {D_i} with finite support; reads outside the support are 0.
class CoefficientFamily {
public:
    CoefficientFamily() = default;

    void set(long i, const Rational& v) {
        if (v == 0)
            entries_.erase(i);
        else
            entries_[i] = v;
    }
    Rational get(long i) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? Rational(0) : it->second;
    }
    const std::map<long, Rational>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    CoefficientFamily operator+(const CoefficientFamily& o) const {
        CoefficientFamily r = *this;
        for (const auto& [i, v] : o.entries_) r.set(i, r.get(i) + v);
        return r;
    }
    CoefficientFamily scaled(const Rational& s) const {
        CoefficientFamily r;
        for (const auto& [i, v] : entries_) r.set(i, v * s);
        return r;
    }

private:
    std::map<long, Rational> entries_;
};

// Family of polynomials f_w of degree w with p-adic unit leading coefficient.
struct NiceFamily {
    std::string name;
    std::function<UniPoly(long w)> generator;

    UniPoly poly(long w) const { return generator(w); }
    Rational leading(long w) const { return poly(w).leading(); }

    // f_w(X) = binom(X(p-1), w), the family every proof step uses.
    static NiceFamily standard(long p) {
        return NiceFamily{
            "binom_x_pminus1",
            [p](long w) { return UniPoly::binom_affine(w, Rational(p - 1), Rational(0)); }};
    }
    // f_w(X) = X_w, handy as a second nice family in property tests.
    static NiceFamily falling_factorials() {
        return NiceFamily{"falling_factorial", [](long w) { return UniPoly::falling(w); }};
    }
};

// T_{w,{f}}(D_i) = sum_i D_i f_w(i)
inline Rational T_functional(const NiceFamily& family, const CoefficientFamily& D, long w) {
    UniPoly fw = family.poly(w);
    Rational total = 0;
    for (const auto& [i, v] : D.entries()) total += v * fw.eval(Rational(i));
    return total;
}

}  // namespace slopecert

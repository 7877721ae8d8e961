#pragma once

#include <vector>

#include "slopecert/bigint.hpp"

namespace slopecert {

// Dense univariate polynomial over Q, coefficient of X^i at index i.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(long degree, const Rational& c);

    // binom(X, n): zero polynomial for n < 0, degree n with leading 1/n!.
    static UniPoly binom(long n);
    // binom(aX + b, n)
    static UniPoly binom_affine(long n, const Rational& a, const Rational& b);
    // falling factorial X_n
    static UniPoly falling(long n);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    // p(X + t)
    UniPoly shift(const Rational& t) const;
    // p(aX)
    UniPoly scale_arg(const Rational& a) const;

    Rational eval(const Rational& x) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// d/dX binom(X, n) evaluated at an integer point.
Rational binom_derivative_at(long n, const BigInt& x);

}  // namespace slopecert

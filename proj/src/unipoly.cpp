#include "slopecert/unipoly.hpp"

#include "slopecert/binomial.hpp"

namespace slopecert {

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(long degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::falling(long n) {
    UniPoly r = constant(1);
    for (long i = 0; i < n; ++i)
        r = r * UniPoly({Rational(-i), Rational(1)});
    return r;
}

UniPoly UniPoly::binom(long n) {
    if (n < 0) return UniPoly();
    return falling(n) * Rational(1, factorial(n));
}

UniPoly UniPoly::binom_affine(long n, const Rational& a, const Rational& b) {
    if (n < 0) return UniPoly();
    UniPoly r = constant(1);
    const UniPoly lin({b, a});
    for (long i = 0; i < n; ++i)
        r = r * (lin - constant(Rational(i)));
    return r * Rational(1, factorial(n));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::shift(const Rational& t) const {
    // Horner in X + t
    UniPoly r;
    const UniPoly lin({t, Rational(1)});
    for (size_t i = c_.size(); i-- > 0;)
        r = r * lin + constant(c_[i]);
    return r;
}

UniPoly UniPoly::scale_arg(const Rational& a) const {
    std::vector<Rational> v = c_;
    Rational pw = 1;
    for (auto& x : v) {
        x *= pw;
        pw *= a;
    }
    return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rational binom_derivative_at(long n, const BigInt& x) {
    return UniPoly::binom(n).derivative().eval(Rational(x));
}

}  // namespace slopecert

#pragma once

#include "skewsym/poly1.hpp"

#include <complex>
#include <string>

namespace skewsym {

/// Rational function in z, kept reduced (monic denominator, gcd cancelled).
class RationalFn {
public:
    RationalFn() : num_(), den_(ComplexRational(1)) {}
    explicit RationalFn(Poly1 p) : num_(std::move(p)), den_(ComplexRational(1)) {}
    RationalFn(Poly1 n, Poly1 d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw error("zero denominator");
        reduce();
    }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool has_monomial_denominator() const { return den_.is_monomial(); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw error("division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn pow(int e) const {
        if (e >= 0) return {num_.pow(e), den_.pow(e)};
        return {den_.pow(-e), num_.pow(-e)};
    }

    /// f(g(z)) for polynomial g.
    RationalFn compose(const Poly1& g) const { return {num_.compose(g), den_.compose(g)}; }

    std::complex<double> evaluate(const std::complex<double>& z) const {
        return num_.evaluate(z) / den_.evaluate(z);
    }

    std::string str(const std::string& var = "z") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly1(ComplexRational(1));
            return;
        }
        Poly1 g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        ComplexRational lead = den_.leading();
        if (!lead.is_one()) {
            ComplexRational inv = ComplexRational(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly1 num_;
    Poly1 den_;
};

} // namespace skewsym

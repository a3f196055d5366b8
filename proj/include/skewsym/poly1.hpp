#pragma once

#include "skewsym/complex_rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skewsym {

/// Sparse univariate polynomial over the Gaussian rationals.
/// Zero coefficients are never stored; degree is the largest stored key.
class Poly1 {
public:
    using TermMap = std::map<int, ComplexRational>;

    Poly1() = default;
    explicit Poly1(const ComplexRational& c) { set(0, c); }

    static Poly1 variable() { return monomial(1, ComplexRational(1)); }
    static Poly1 monomial(int n, const ComplexRational& c) {
        if (n < 0) throw error("negative exponent in polynomial");
        Poly1 p;
        p.set(n, c);
        return p;
    }
    static Poly1 from_terms(std::vector<std::pair<int, ComplexRational>> ts) {
        Poly1 p;
        for (auto& [n, c] : ts) p.add_term(n, c);
        return p;
    }

    void set(int n, const ComplexRational& c) {
        if (c.is_zero()) terms_.erase(n);
        else terms_[n] = c;
    }
    void add_term(int n, const ComplexRational& c) {
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[n] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    int valuation() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    ComplexRational leading() const {
        return terms_.empty() ? ComplexRational() : terms_.rbegin()->second;
    }
    ComplexRational coeff(int n) const {
        auto it = terms_.find(n);
        return it == terms_.end() ? ComplexRational() : it->second;
    }
    bool is_constant() const { return degree() <= 0; }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_monic() const { return leading().is_one(); }
    std::size_t term_count() const { return terms_.size(); }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        Poly1 r = a;
        for (auto& [n, c] : b.terms_) r.add_term(n, c);
        return r;
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) {
        Poly1 r = a;
        for (auto& [n, c] : b.terms_) r.add_term(n, -c);
        return r;
    }
    Poly1 operator-() const {
        Poly1 r;
        for (auto& [n, c] : terms_) r.terms_[n] = -c;
        return r;
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        Poly1 r;
        for (auto& [n1, c1] : a.terms_)
            for (auto& [n2, c2] : b.terms_) r.add_term(n1 + n2, c1 * c2);
        return r;
    }
    friend Poly1 operator*(const ComplexRational& c, const Poly1& p) {
        Poly1 r;
        if (c.is_zero()) return r;
        for (auto& [n, pc] : p.terms_) r.terms_[n] = c * pc;
        return r;
    }

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Poly1 pow(int e) const {
        if (e < 0) throw error("negative exponent in polynomial");
        Poly1 acc(ComplexRational(1)), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// p(g(z)), by Horner's scheme over the sparse terms.
    Poly1 compose(const Poly1& g) const {
        Poly1 r;
        int prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0) r = r * g.pow(prev - it->first);
            r.add_term(0, it->second);
            prev = it->first;
        }
        if (prev > 0) r = r * g.pow(prev);
        return r;
    }

    /// p(z + c)
    Poly1 shift(const ComplexRational& c) const {
        if (c.is_zero()) return *this;
        return compose(from_terms({{1, ComplexRational(1)}, {0, c}}));
    }

    Poly1 derivative() const {
        Poly1 r;
        for (auto& [n, c] : terms_)
            if (n > 0) r.set(n - 1, ComplexRational(n) * c);
        return r;
    }

    ComplexRational evaluate(const ComplexRational& z) const {
        ComplexRational r;
        int prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0) r *= z.pow(prev - it->first);
            r += it->second;
            prev = it->first;
        }
        if (prev > 0) r *= z.pow(prev);
        return r;
    }

    std::complex<double> evaluate(const std::complex<double>& z) const {
        auto ipow = [](std::complex<double> b, int e) {
            std::complex<double> r = 1.0;
            while (e) {
                if (e & 1) r *= b;
                b *= b;
                e >>= 1;
            }
            return r;
        };
        std::complex<double> r = 0;
        int prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (prev >= 0) r *= ipow(z, prev - it->first);
            r += it->second.to_complex();
            prev = it->first;
        }
        if (prev > 0) r *= ipow(z, prev);
        return r;
    }

    std::string str(const std::string& var = "z") const;

private:
    TermMap terms_;
};

/// Exact division; throws if the remainder is nonzero.
inline Poly1 exact_div(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    Poly1 rem = a, quot;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int n = rem.degree() - b.degree();
        ComplexRational c = rem.leading() / b.leading();
        Poly1 t = Poly1::monomial(n, c);
        quot = quot + t;
        rem = rem - t * b;
    }
    if (!rem.is_zero()) throw error("inexact polynomial division");
    return quot;
}

inline std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    Poly1 rem = a, quot;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int n = rem.degree() - b.degree();
        ComplexRational c = rem.leading() / b.leading();
        Poly1 t = Poly1::monomial(n, c);
        quot = quot + t;
        rem = rem - t * b;
    }
    return {quot, rem};
}

/// Monic gcd over Q(i), Euclid's algorithm.
inline Poly1 poly_gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = divmod(a, b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return (ComplexRational(1) / a.leading()) * a;
}

inline std::string Poly1::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [n, c] = *it;
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                   cs.find('-', 1) == std::string::npos;
        if (!out.empty()) {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        } else if (neg) {
            out += "-";
            cs = cs.substr(1);
        }
        bool unit = (cs == "1");
        bool needs_parens = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
        std::string cpart = needs_parens ? "(" + cs + ")" : cs;
        if (n == 0) out += cpart;
        else {
            std::string vpart = (n == 1) ? var : var + "^" + std::to_string(n);
            out += unit ? vpart : cpart + "*" + vpart;
        }
    }
    return out;
}

} // namespace skewsym

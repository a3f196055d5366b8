#pragma once

#include "skewsym/poly1.hpp"

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skewsym {

/// Sparse polynomial in (z, w), Laurent in z: the z-exponent may be
/// negative, the w-exponent never is. Zero coefficients are not stored.
class SkewPoly {
public:
    using Key = std::pair<int, int>; // (z exponent, w exponent)
    using TermMap = std::map<Key, ComplexRational>;

    static constexpr std::size_t kDefaultTermBudget = 200000;

    SkewPoly() = default;
    explicit SkewPoly(const ComplexRational& c) { set(0, 0, c); }

    static SkewPoly monomial(int n, int m, const ComplexRational& c) {
        if (m < 0) throw error("negative w-exponent");
        SkewPoly q;
        q.set(n, m, c);
        return q;
    }
    static SkewPoly from_poly1(const Poly1& p, bool as_w) {
        SkewPoly q;
        for (auto& [n, c] : p.terms()) q.set(as_w ? 0 : n, as_w ? n : 0, c);
        return q;
    }

    void set(int n, int m, const ComplexRational& c) {
        if (c.is_zero()) terms_.erase({n, m});
        else terms_[{n, m}] = c;
    }
    void add_term(int n, int m, const ComplexRational& c) {
        auto it = terms_.find({n, m});
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[{n, m}] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int w_degree() const {
        int d = -1;
        for (auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }
    int min_z_exponent() const {
        int n = 0;
        bool first = true;
        for (auto& [k, c] : terms_) {
            if (first || k.first < n) n = k.first;
            first = false;
        }
        return n;
    }
    bool is_polynomial() const { return min_z_exponent() >= 0; }

    /// Coefficient of w^m as a map z-exponent -> coefficient (Laurent).
    std::map<int, ComplexRational> w_coefficient(int m) const {
        std::map<int, ComplexRational> out;
        for (auto& [k, c] : terms_)
            if (k.second == m) out[k.first] = c;
        return out;
    }
    /// Coefficient of w^m as a Poly1; throws if it has negative z-powers.
    Poly1 w_coefficient_poly(int m) const {
        Poly1 out;
        for (auto& [k, c] : terms_)
            if (k.second == m) {
                if (k.first < 0) throw error("negative exponent in polynomial");
                out.set(k.first, c);
            }
        return out;
    }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        SkewPoly r = a;
        for (auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
        SkewPoly r = a;
        for (auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    SkewPoly operator-() const {
        SkewPoly r;
        for (auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    friend SkewPoly operator*(const ComplexRational& c, const SkewPoly& q) {
        SkewPoly r;
        if (c.is_zero()) return r;
        for (auto& [k, qc] : q.terms_) r.terms_[k] = c * qc;
        return r;
    }

    SkewPoly mul(const SkewPoly& o, std::size_t budget = kDefaultTermBudget) const {
        SkewPoly r;
        for (auto& [k1, c1] : terms_)
            for (auto& [k2, c2] : o.terms_) {
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
                if (r.term_count() > budget) throw error("iterate too large");
            }
        return r;
    }
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) { return a.mul(b); }

    SkewPoly pow(int e, std::size_t budget = kDefaultTermBudget) const {
        if (e < 0) throw error("negative exponent in polynomial");
        SkewPoly acc(ComplexRational(1)), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc.mul(base, budget);
            base = (e >>= 1) ? base.mul(base, budget) : base;
        }
        return acc;
    }

    /// Multiply by z^k (k may be negative).
    SkewPoly shift_z(int k) const {
        SkewPoly r;
        for (auto& [key, c] : terms_) r.terms_[{key.first + k, key.second}] = c;
        return r;
    }

    /// this(P(z), W(z,w)). Negative z-powers require P to be a monomial
    /// (Laurent substitution); otherwise the result leaves the ring.
    SkewPoly substitute(const Poly1& P, const SkewPoly& W,
                        std::size_t budget = kDefaultTermBudget) const {
        bool laurent = min_z_exponent() < 0;
        if (laurent && !P.is_monomial()) throw error("non-monomial denominator");
        // group terms by w-exponent, Horner in w
        int dmax = w_degree();
        SkewPoly r;
        for (int m = dmax; m >= 0; --m) {
            if (m < dmax) r = r.mul(W, budget);
            for (auto& [k, c] : terms_) {
                if (k.second != m) continue;
                if (k.first >= 0) {
                    Poly1 zn = P.pow(k.first);
                    for (auto& [pn, pc] : zn.terms()) r.add_term(pn, 0, c * pc);
                } else {
                    // P = a z^t; P^k = a^k z^{t k} for negative k as well
                    int t = P.degree();
                    ComplexRational a = P.leading();
                    r.add_term(t * k.first, 0, c * a.pow(k.first));
                }
                if (r.term_count() > budget) throw error("iterate too large");
            }
        }
        return r;
    }

    ComplexRational evaluate(const ComplexRational& z, const ComplexRational& w) const {
        ComplexRational r;
        for (auto& [k, c] : terms_) r += c * z.pow(k.first) * w.pow(k.second);
        return r;
    }
    std::complex<double> evaluate(const std::complex<double>& z,
                                  const std::complex<double>& w) const {
        auto ipow = [](std::complex<double> b, int e) {
            if (e < 0) {
                b = 1.0 / b;
                e = -e;
            }
            std::complex<double> r = 1.0;
            while (e) {
                if (e & 1) r *= b;
                b *= b;
                e >>= 1;
            }
            return r;
        };
        std::complex<double> r = 0;
        for (auto& [k, c] : terms_) r += c.to_complex() * ipow(z, k.first) * ipow(w, k.second);
        return r;
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        // highest w-degree first, then highest z-degree
        std::vector<std::pair<Key, ComplexRational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
            if (a.first.second != b.first.second) return a.first.second > b.first.second;
            return a.first.first > b.first.first;
        });
        std::string out;
        for (auto& [k, c] : ts) {
            std::string cs = c.str();
            bool neg = cs.size() > 0 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                       cs.find('-', 1) == std::string::npos;
            if (!out.empty()) {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            } else if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
            bool needs_parens =
                cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
            std::string cpart = needs_parens ? "(" + cs + ")" : cs;
            std::string vars;
            if (k.first != 0) vars = (k.first == 1) ? "z" : "z^" + std::to_string(k.first);
            if (k.second != 0) {
                if (!vars.empty()) vars += "*";
                vars += (k.second == 1) ? "w" : "w^" + std::to_string(k.second);
            }
            if (vars.empty()) out += cpart;
            else out += (cs == "1") ? vars : cpart + "*" + vars;
        }
        return out;
    }

private:
    TermMap terms_;
};

} // namespace skewsym

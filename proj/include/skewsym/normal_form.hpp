#pragma once

#include "skewsym/rational_fn.hpp"
#include "skewsym/skew_product.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace skewsym {

/// f is in normal form when p and b_d are monic and the subleading
/// coefficients a_{delta-1}, b_{d-1} vanish (centroids at the origin).
inline bool is_normal_form(const SkewProduct& f) {
    return f.p.is_monic() && f.p.coeff(f.delta - 1).is_zero() && f.b[f.d].is_monic() &&
           f.b[f.d - 1].is_zero();
}

/// One scaling constant, defined by c^exponent = target. The value is
/// generally irrational, so it is kept as the defining equation plus a
/// principal-branch numeric approximation; an exact value is attached
/// when the equation happens to solve in Q(i).
struct ScaleSpec {
    int exponent = 1;
    ComplexRational target{1};
    std::optional<ComplexRational> exact;
    std::complex<double> numeric{1.0, 0.0};

    static ScaleSpec solve(int exponent, const ComplexRational& target) {
        ScaleSpec s;
        s.exponent = exponent;
        s.target = target;
        if (target.is_one()) s.exact = ComplexRational(1);
        else if (exponent == 1) s.exact = target;
        if (s.exact) s.numeric = s.exact->to_complex();
        else s.numeric = std::pow(target.to_complex(), 1.0 / double(exponent));
        return s;
    }

    double residual() const {
        std::complex<double> v = 1.0;
        for (int i = 0; i < exponent; ++i) v *= numeric;
        return std::abs(v - target.to_complex());
    }
};

/// Result of conjugating f by h(z,w) = (c1 (z - zeta), c2 (w - zeta_z)).
/// The translation part is applied exactly; the scaling is kept symbolic
/// as ScaleSpecs because it does not change term supports, which is all
/// the exact pipeline consumes.
struct NormalizedSkew {
    SkewProduct original;
    CentroidData cent;

    Poly1 p_norm;                      // p(z + zeta) - zeta
    std::vector<RationalFn> q_coeffs;  // w-coefficients of the conjugated q
    bool laurent_ok = false;
    SkewPoly q_norm;                   // valid iff laurent_ok (Laurent in z)

    int delta = 0, d = 0, l = 0;
    ScaleSpec c1, c2;
    bool already_normal = false;

    bool p_is_monomial() const { return p_norm.is_monomial(); }
    const Poly1& bd_norm() const { return bd_; }
    bool bd_is_monomial() const { return bd_.is_monomial(); }

    /// true iff every coefficient below w^d vanishes (fiber maps are
    /// w -> b(z) w^d up to scaling)
    bool q_is_bd_wd() const {
        for (int m = 0; m < d; ++m)
            if (!q_coeffs[m].is_zero()) return false;
        return true;
    }

    /// |c1^(delta-1) - a_delta| and |c1^l c2^(d-1) - lead(b_d)|.
    std::pair<double, double> scale_residuals() const {
        auto ipow = [](std::complex<double> v, int e) {
            std::complex<double> r = 1.0;
            for (int i = 0; i < e; ++i) r *= v;
            return r;
        };
        double r1 = std::abs(ipow(c1.numeric, delta - 1) - original.p.leading().to_complex());
        double r2 = std::abs(ipow(c1.numeric, l) * ipow(c2.numeric, d - 1) -
                             original.b[d].leading().to_complex());
        return {r1, r2};
    }

    /// The fully scaled normalized map when both constants are exact.
    std::optional<std::pair<Poly1, SkewPoly>> exact_scaled() const {
        if (!c1.exact || !c2.exact || !laurent_ok) return std::nullopt;
        const ComplexRational& s1 = *c1.exact;
        const ComplexRational& s2 = *c2.exact;
        Poly1 pt;
        for (auto& [j, c] : p_norm.terms()) pt.set(j, c * s1.pow(1 - j));
        SkewPoly qt;
        for (auto& [k, c] : q_norm.terms())
            qt.set(k.first, k.second, c * s2.pow(1 - k.second) * s1.pow(-k.first));
        return std::make_pair(pt, qt);
    }

    Poly1 bd_;
};

inline NormalizedSkew normalize(const SkewProduct& f) {
    NormalizedSkew out;
    out.original = f;
    out.cent = centroids(f);
    out.delta = f.delta;
    out.d = f.d;
    out.l = f.l;
    out.already_normal = is_normal_form(f);

    const ComplexRational& zeta = out.cent.zeta;
    out.p_norm = f.p.shift(zeta) - Poly1(zeta);

    // shifted fiber coefficients B_j(z) = b_j(z + zeta)
    std::vector<Poly1> B(f.d + 1);
    for (int j = 0; j <= f.d; ++j) B[j] = f.b[j].shift(zeta);

    // w-translation by t(z) = zeta_{z+zeta}, then subtract zeta_{p(z+zeta)}
    RationalFn t(-B[f.d - 1], ComplexRational(f.d) * B[f.d]);
    RationalFn s = out.cent.zeta_z.compose(f.p.shift(zeta));

    // binomial table
    std::vector<std::vector<Rational>> binom(f.d + 1, std::vector<Rational>(f.d + 1, 0));
    for (int n = 0; n <= f.d; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : Rational(0));
    }

    std::vector<RationalFn> tpow(f.d + 1);
    tpow[0] = RationalFn(Poly1(ComplexRational(1)));
    for (int k = 1; k <= f.d; ++k) tpow[k] = tpow[k - 1] * t;

    out.q_coeffs.assign(f.d + 1, RationalFn());
    for (int m = 0; m <= f.d; ++m) {
        RationalFn acc;
        for (int j = m; j <= f.d; ++j) {
            if (B[j].is_zero()) continue;
            acc = acc + RationalFn(ComplexRational(binom[j][m]) * B[j]) * tpow[j - m];
        }
        if (m == 0) acc = acc - s;
        out.q_coeffs[m] = acc;
    }
    out.bd_ = out.q_coeffs[f.d].num(); // denominator is 1 by construction

    out.laurent_ok = true;
    for (int m = 0; m <= f.d; ++m) {
        const RationalFn& c = out.q_coeffs[m];
        if (!c.is_zero() && !c.has_monomial_denominator()) out.laurent_ok = false;
    }
    if (out.laurent_ok) {
        SkewPoly qn;
        for (int m = 0; m <= f.d; ++m) {
            const RationalFn& c = out.q_coeffs[m];
            if (c.is_zero()) continue;
            int shift = c.den().degree(); // monomial z^shift (monic)
            for (auto& [n, cc] : c.num().terms()) qn.add_term(n - shift, m, cc);
        }
        out.q_norm = qn;
    }

    out.c1 = ScaleSpec::solve(f.delta - 1, f.p.leading());
    // c1^l c2^{d-1} = lead(b_d): exact when c1 is
    if (out.c1.exact) {
        out.c2 = ScaleSpec::solve(f.d - 1, f.b[f.d].leading() / out.c1.exact->pow(f.l));
    } else {
        out.c2 = ScaleSpec::solve(f.d - 1, f.b[f.d].leading());
        out.c2.numeric = std::pow(f.b[f.d].leading().to_complex() /
                                      std::pow(out.c1.numeric, double(f.l)),
                                  1.0 / double(f.d - 1));
        out.c2.exact.reset();
    }
    return out;
}

} // namespace skewsym

#pragma once

#include "skewsym/normal_form.hpp"
#include "skewsym/rational_turn.hpp"
#include "skewsym/skew_product.hpp"

#include <optional>
#include <utility>

namespace skewsym {

/// A symmetry realized as the affine map
///   gamma(z,w) = (mu (z - zeta) + zeta, nu (w - zeta_z) + zeta_{sigma(z)}).
/// The symbolic form exists when mu, nu lie in Q(i) and zeta_z is a
/// polynomial; numeric application is always available.
struct SymmetryElement {
    TurnPair turns;
    Cplx mu_c, nu_c;
    ComplexRational zeta;
    RationalFn zeta_z;

    std::pair<Cplx, Cplx> apply(const Cplx& z, const Cplx& w) const {
        Cplx zc = zeta.to_complex();
        Cplx sz = mu_c * (z - zc) + zc;
        return {sz, nu_c * (w - zeta_z.evaluate(z)) + zeta_z.evaluate(sz)};
    }

    /// (first component, second component) as exact polynomials, when
    /// representable.
    std::optional<std::pair<Poly1, SkewPoly>> symbolic() const {
        ComplexRational mu_e, nu_e;
        if (!turns.first.exact_value(mu_e) || !turns.second.exact_value(nu_e))
            return std::nullopt;
        if (!zeta_z.is_polynomial()) return std::nullopt;
        Poly1 first = Poly1::from_terms({{1, mu_e}, {0, (ComplexRational(1) - mu_e) * zeta}});
        // sigma(z) = mu (z - zeta) + zeta
        Poly1 sigma = first;
        Poly1 zz = (ComplexRational(1) / zeta_z.den().coeff(0)) * zeta_z.num();
        SkewPoly second = SkewPoly::monomial(0, 1, nu_e); // nu * w
        Poly1 shift = zz.compose(sigma) - nu_e * zz;       // zeta_{sigma(z)} - nu zeta_z
        for (auto& [n, c] : shift.terms()) second.add_term(n, 0, c);
        return std::make_pair(first, second);
    }
};

inline SymmetryElement realize_element(const SkewProduct& f, const TurnPair& t) {
    CentroidData c = centroids(f);
    SymmetryElement e;
    e.turns = t;
    e.mu_c = t.first.to_complex();
    e.nu_c = t.second.to_complex();
    e.zeta = c.zeta;
    e.zeta_z = c.zeta_z;
    return e;
}

inline SymmetryElement realize_element(const SkewProduct& f, Cplx mu, Cplx nu) {
    CentroidData c = centroids(f);
    SymmetryElement e;
    e.mu_c = mu;
    e.nu_c = nu;
    e.zeta = c.zeta;
    e.zeta_z = c.zeta_z;
    return e;
}

/// Level-1 intertwining check on the normalized support:
/// f gamma = gamma_1 f with gamma = (mu z, nu w) and
/// gamma_1 = (mu^delta z, mu^l nu^d w), read term-by-term.
inline bool check_level1(const NormalizedSkew& nf, const TurnPair& t) {
    const auto& [mu, nu] = t;
    for (auto& [j, c] : nf.p_norm.terms())
        if (!mu.pow(nf.delta - j).is_one()) return false;
    if (!nf.laurent_ok) throw error("bounds mode required");
    for (auto& [k, c] : nf.q_norm.terms()) {
        RationalTurn lhs = mu.pow(k.first) * nu.pow(k.second);
        RationalTurn rhs = mu.pow(nf.l) * nu.pow(nf.d);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace skewsym

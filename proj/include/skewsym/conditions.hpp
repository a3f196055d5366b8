#pragma once

#include "skewsym/lattice.hpp"
#include "skewsym/normal_form.hpp"
#include "skewsym/sigma.hpp"

#include <cstdint>
#include <vector>

namespace skewsym {

/// Character conditions forced on (mu, nu) by the level-1 identity
/// q(mu z, nu w) = mu^l nu^d q(z, w): one vector (n - l, m - d) per term.
/// Requires the leading coefficient to be the monomial z^l; otherwise the
/// term-wise reading of the identity is unavailable.
inline std::vector<Vec2> fiber_condition_vectors(const SkewPoly& q_norm, int d, int l) {
    std::map<int, ComplexRational> lead = q_norm.w_coefficient(d);
    if (lead.size() != 1 || lead.begin()->first != l) throw error("bounds mode required");
    std::vector<Vec2> out;
    for (auto& [k, c] : q_norm.terms()) {
        Vec2 v{std::int64_t(k.first - l), std::int64_t(k.second - d)};
        if (v[0] == 0 && v[1] == 0) continue;
        out.push_back(v);
    }
    return out;
}

/// Level-1 conditions plus their closure under the iterate pullback.
struct ConditionSet {
    std::vector<Vec2> base;
    std::vector<Vec2> fiber;
    IntLattice2 lattice;
    std::int64_t mstar[2][2] = {{0, 0}, {0, 0}}; // [[delta, l], [0, d]]
};

/// Minimal lattice containing L0 and stable under the pullback
/// M* (a,b) = (delta a + l b, d b), which encodes passing from the
/// level-n symmetry equation to level n+1. Ascending chains of
/// subgroups of Z^2 stabilize, so the loop terminates.
inline IntLattice2 mstar_closure(const IntLattice2& L0, int delta, int d, int l) {
    IntLattice2 L = L0;
    for (;;) {
        bool stable = true;
        std::vector<Vec2> gens(L.basis());
        for (const Vec2& v : L.basis()) {
            Vec2 mv{delta * v[0] + l * v[1], d * v[1]};
            if (!L.contains(mv)) {
                gens.push_back(mv);
                stable = false;
            }
        }
        if (stable) return L;
        L = hnf_basis(gens);
    }
}

/// Assemble the full condition set of a normalized map whose leading
/// fiber coefficient is the monomial z^l.
inline ConditionSet condition_set(const NormalizedSkew& nf) {
    ConditionSet cs;
    cs.base = base_condition_vectors(nf.p_norm);
    cs.fiber = fiber_condition_vectors(nf.q_norm, nf.d, nf.l);
    std::vector<Vec2> all = cs.base;
    all.insert(all.end(), cs.fiber.begin(), cs.fiber.end());
    cs.lattice = mstar_closure(hnf_basis(all), nf.delta, nf.d, nf.l);
    cs.mstar[0][0] = nf.delta;
    cs.mstar[0][1] = nf.l;
    cs.mstar[1][0] = 0;
    cs.mstar[1][1] = nf.d;
    return cs;
}

} // namespace skewsym

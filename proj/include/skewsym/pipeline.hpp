#pragma once

#include "skewsym/conditions.hpp"
#include "skewsym/normal_form.hpp"
#include "skewsym/sigma.hpp"
#include "skewsym/torus_group.hpp"
#include "skewsym/verify.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace skewsym {

/// How the reported group relates to the true symmetry group.
/// Exact carries the hypothesis that was verified:
///   CorI   - normal form, q not divisible by a nonconstant polynomial in z
///   CorII  - normal form and b_d = z^l
///   CorIII - p = z^delta and b_d = z^l
///   TypeIIIBound - lower and upper bounds for the type (iii) shape coincide
struct Status {
    enum class Kind { Exact, CandidateUpperBound, BoundsPair };
    enum class Justification { None, CorI, CorII, CorIII, TypeIIIBound };

    Kind kind = Kind::CandidateUpperBound;
    Justification just = Justification::None;

    bool exact() const { return kind == Kind::Exact; }

    std::string str() const {
        switch (kind) {
            case Kind::Exact:
                switch (just) {
                    case Justification::CorI: return "exact (normal form, z-primitive q)";
                    case Justification::CorII: return "exact (normal form, b_d = z^l)";
                    case Justification::CorIII: return "exact (p = z^delta, b_d = z^l)";
                    case Justification::TypeIIIBound: return "exact (coinciding bounds)";
                    default: return "exact";
                }
            case Kind::BoundsPair: return "bounds pair";
            default: return "candidate upper bound";
        }
    }
};

/// q is divisible by a nonconstant polynomial in z iff the gcd of all
/// its w-coefficients (as polynomials in z) is nonconstant.
inline bool q_divisible_by_z_poly(const std::vector<RationalFn>& q_coeffs) {
    Poly1 g;
    int min_shift = 0;
    for (const RationalFn& c : q_coeffs) {
        if (c.is_zero()) continue;
        if (!c.is_polynomial()) return false; // Laurent: handled elsewhere
        g = poly_gcd(g, c.num());
    }
    (void)min_shift;
    return g.degree() > 0;
}

struct SymmetryAnalysis {
    NormalizedSkew norm;
    CircleGroup sigma_p;

    SymmetryGroup group; // exact group, or the upper bound
    Status status;
    std::optional<SymmetryGroup> lower; // set in bounds mode
    std::optional<ConditionSet> conditions; // set on the lattice path

    bool numeric_advice = false; // candidate results want numeric verification
};

/// The subgroup {mu in Sigma_p : b_d(mu z) = mu^l b_d(z)} x S^1, i.e. the
/// exact-symmetry gate on the leading coefficient. A guaranteed subgroup
/// of the symmetry group for maps q = b_d(z) w^d (b_{d-1} vanishes).
inline SymmetryGroup bd_gate_subgroup(const Poly1& bd, int l, const CircleGroup& sigma_p) {
    std::int64_t g = 0; // order of {mu : mu^{l-j} = 1 for all b_d terms}
    for (auto& [j, c] : bd.terms()) g = std::gcd(g, std::int64_t(l - j));
    // g == 0: condition vacuous (b_d a monomial)
    std::int64_t order;
    if (g == 0) order = sigma_p.infinite ? 0 : sigma_p.order;
    else if (sigma_p.infinite) order = g;
    else order = std::gcd(g, sigma_p.order);
    return mu_factor_times_circle(order);
}

inline Status::Justification corollary_hypothesis(const NormalizedSkew& nf) {
    bool q_poly = true;
    for (const RationalFn& c : nf.q_coeffs)
        if (!c.is_zero() && !c.is_polynomial()) q_poly = false;
    bool bd_mono = nf.bd_is_monomial();
    if (q_poly && bd_mono)
        return Status::Justification::CorII; // normal form with b_d = z^l
    if (nf.p_is_monomial() && bd_mono)
        return Status::Justification::CorIII; // p = z^delta, b_d = z^l (Laurent allowed)
    if (q_poly && !q_divisible_by_z_poly(nf.q_coeffs))
        return Status::Justification::CorI;
    return Status::Justification::None;
}

/// Default candidate orders for the numeric |b_d| filter.
inline std::vector<std::int64_t> filter_candidate_orders() {
    std::vector<std::int64_t> v;
    for (std::int64_t m = 1; m <= 64; ++m) v.push_back(m);
    return v;
}

/// Upper bound on the mu-factor for type (iii) maps: elements of Sigma_p
/// passing the |b_d(sigma(z))| = |b_d(z)| filter on sampled J_p.
/// Returns 0 for "all of S^1 passes" (only when Sigma_p is infinite).
/// One sample batch serves every candidate.
inline std::int64_t filter_mu_order(const SkewProduct& f, const CircleGroup& sigma_p,
                                    int sample_count, double tol, std::uint64_t seed) {
    CentroidData cent = centroids(f);
    Cplx zeta = cent.zeta.to_complex();
    std::vector<Cplx> zs = sample_julia_base(f.p, sample_count, seed);
    std::vector<double> mods(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i)
        mods[i] = std::abs(f.b[f.d].evaluate(zs[i]));
    auto passes = [&](Cplx mu) {
        double dev = 0.0;
        for (std::size_t i = 0; i < zs.size(); ++i) {
            Cplx sz = mu * (zs[i] - zeta) + zeta;
            dev = std::max(dev, std::abs(std::abs(f.b[f.d].evaluate(sz)) - mods[i]));
        }
        return dev <= tol;
    };
    std::int64_t order = 1;
    if (!sigma_p.infinite) {
        for (std::int64_t k = 1; k < sigma_p.order; ++k) {
            RationalTurn t(k, sigma_p.order);
            if (passes(t.to_complex())) order = std::lcm(order, t.order());
        }
        return order;
    }
    // generic angles first: if they pass, the whole circle does
    bool generic = true;
    for (double th : {0.7390851332151607, 2.026423672846756, 4.51240124}) {
        if (!passes(Cplx(std::cos(th), std::sin(th)))) {
            generic = false;
            break;
        }
    }
    if (generic) return 0;
    for (std::int64_t m : filter_candidate_orders()) {
        if (m == 1 || order % m == 0) continue;
        RationalTurn t(1, m);
        if (passes(t.to_complex())) order = std::lcm(order, m);
    }
    return order;
}

/// Full pipeline: normalize, then either the exact condition-lattice
/// route (b_d a monomial after normalization), the two-sided bounds for
/// q = b_d(z) w^d with general b_d, or an honest upper bound.
inline SymmetryAnalysis symmetry_group(const SkewProduct& f, int filter_samples = 2000,
                                       double filter_tol = 1e-6, std::uint64_t seed = 11) {
    SymmetryAnalysis out;
    out.norm = normalize(f);
    out.sigma_p = sigma_group(f.p);

    const NormalizedSkew& nf = out.norm;
    if (nf.laurent_ok && nf.bd_is_monomial()) {
        out.conditions = condition_set(nf);
        out.group = annihilator(out.conditions->lattice);
        Status::Justification j = corollary_hypothesis(nf);
        if (j != Status::Justification::None) {
            out.status.kind = Status::Kind::Exact;
            out.status.just = j;
        } else {
            out.status.kind = Status::Kind::CandidateUpperBound;
            out.numeric_advice = true;
        }
        return out;
    }

    if (nf.laurent_ok && nf.q_is_bd_wd() && nf.q_norm.is_polynomial()) {
        // type (iii) shape with non-monomial b_d: report both bounds
        SymmetryGroup low = bd_gate_subgroup(nf.bd_norm(), nf.l, out.sigma_p);
        std::int64_t up_order = filter_mu_order(f, out.sigma_p, filter_samples, filter_tol, seed);
        SymmetryGroup up = mu_factor_times_circle(up_order);
        out.lower = low;
        out.group = up;
        if (low == up) {
            out.status.kind = Status::Kind::Exact;
            out.status.just = Status::Justification::TypeIIIBound;
        } else {
            out.status.kind = Status::Kind::BoundsPair;
            out.numeric_advice = true;
        }
        return out;
    }

    // no exact route: Sigma_p x S^1 always contains the symmetry group
    out.group = mu_factor_times_circle(out.sigma_p.infinite ? 0 : out.sigma_p.order);
    out.status.kind = Status::Kind::CandidateUpperBound;
    out.numeric_advice = true;
    return out;
}

} // namespace skewsym

#pragma once

#include "skewsym/pipeline.hpp"
#include "skewsym/sigma.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace skewsym {

enum class TypeTag { I, II, III, IV, FiniteSym };

inline const char* to_string(TypeTag t) {
    switch (t) {
        case TypeTag::I: return "I";
        case TypeTag::II: return "II";
        case TypeTag::III: return "III";
        case TypeTag::IV: return "IV";
        default: return "finite";
    }
}

/// Witness for type (iv): pi(z,w) = (z^r, z^s w) intertwines the map
/// with the one-variable base map q(1,w).
struct Semiconjugacy {
    std::int64_t r = 1;
    std::int64_t s = 1;
    Poly1 base_w;     // q(1,w) of the translation-normalized map
    bool base_exact = true; // false when the scaling constants are irrational
};

/// Decide whether q(z^r, z^s w) = z^{s delta} q(1,w) for coprime (r,s),
/// r > 0: all term ratios (n - l)/(d - m) must agree and the exponent
/// balance r l + s (d - delta) = 0 must hold; the substitution identity
/// is then verified exactly on the Laurent support.
inline std::optional<Semiconjugacy> detect_semiconjugacy(const SkewPoly& q_norm, int delta, int d,
                                                         int l) {
    std::vector<std::pair<std::int64_t, std::int64_t>> lower; // (n - l, d - m)
    for (auto& [k, c] : q_norm.terms()) {
        if (k.second == d) {
            if (k.first != l) return std::nullopt; // leading coefficient not z^l
            continue;
        }
        lower.push_back({k.first - l, d - k.second});
    }
    if (lower.empty()) return std::nullopt;

    auto [a0, b0] = lower[0];
    if (a0 == 0) return std::nullopt; // ratio 0 means s = 0
    for (auto& [a, b] : lower)
        if (a * b0 != a0 * b) return std::nullopt;

    std::int64_t g = std::gcd(a0 < 0 ? -a0 : a0, b0);
    std::int64_t s = a0 / g, r = b0 / g;
    if (r < 0) { r = -r; s = -s; } // convention: r > 0 carries no sign
    if (r == 0 || s == 0) return std::nullopt;
    if (r * std::int64_t(l) + s * std::int64_t(d - delta) != 0) return std::nullopt;
    if (l == 0 && !(delta == d && s > 0)) return std::nullopt;

    // exact substitution check: q(z^r, z^s w) == z^{s delta} q(1, w)
    SkewPoly lhs, rhs;
    Poly1 base;
    for (auto& [k, c] : q_norm.terms()) {
        lhs.add_term(int(r) * k.first + int(s) * k.second, k.second, c);
        rhs.add_term(int(s) * delta, k.second, c);
        base.add_term(k.second, c);
    }
    if (lhs != rhs) return std::nullopt;

    Semiconjugacy out;
    out.r = r;
    out.s = s;
    out.base_w = base;
    return out;
}

/// Machine-readable description of the Julia set shape per type.
struct JuliaShape {
    std::string shape;       // torus | product_circle_julia | circle_bundle |
                             // rotated_family | finite_symmetry
    std::string julia_of;    // the one-variable polynomial whose Julia set appears
    std::string radius;      // circle bundle: radius as a function of z
    std::int64_t s = 0, r = 0; // rotated family exponents
    bool phi_constant_checked = false;
    bool phi_constant = false; // numeric overlap check for (iii) over S^1
};

struct ClassificationReport {
    SymmetryAnalysis analysis;
    TypeTag tag = TypeTag::FiniteSym;
    bool uncertain = false; // group not exact (tag itself is decided exactly)
    std::optional<Semiconjugacy> witness;
    std::optional<std::int64_t> sigma_factor_order; // finite factor for II/III
    JuliaShape shape;
    Compactness compactness = Compactness::Uncertain;
};

inline JuliaShape julia_shape(const ClassificationReport& rep) {
    JuliaShape js;
    const NormalizedSkew& nf = rep.analysis.norm;
    switch (rep.tag) {
        case TypeTag::I:
            js.shape = "torus";
            break;
        case TypeTag::II: {
            js.shape = "product_circle_julia";
            Poly1 qw;
            for (int m = 0; m <= nf.d; ++m)
                if (!nf.q_coeffs[std::size_t(m)].is_zero())
                    qw.add_term(m, nf.q_coeffs[std::size_t(m)].num().coeff(0));
            js.julia_of = qw.str("w");
            break;
        }
        case TypeTag::III: {
            js.shape = "circle_bundle";
            js.radius = "exp(-Phi(z)) over J_p";
            if (nf.p_is_monomial()) {
                // overlap check with (i): is the radius constant over J_p = S^1?
                js.phi_constant_checked = true;
                GreenEvaluator ev(rep.analysis.norm.original);
                std::vector<Cplx> zs = sample_julia_base(rep.analysis.norm.original.p, 64, 17);
                double lo = 1e300, hi = -1e300;
                for (const Cplx& z : zs) {
                    PhiResult pr = ev.phi_sum(z);
                    if (pr.status == PhiStatus::Degenerate) continue;
                    lo = std::min(lo, pr.value);
                    hi = std::max(hi, pr.value);
                }
                js.phi_constant = (hi - lo) < 1e-6;
            }
            break;
        }
        case TypeTag::IV:
            js.shape = "rotated_family";
            js.s = rep.witness ? rep.witness->s : 0;
            js.r = rep.witness ? rep.witness->r : 0;
            if (rep.witness) js.julia_of = rep.witness->base_w.str("w");
            break;
        default:
            js.shape = "finite_symmetry";
            break;
    }
    return js;
}

/// Classify per the normal-form / normalized-rational classification:
/// the symmetry group is infinite iff the normalized map has one of the
/// four shapes, each decided exactly on the translation-normalized
/// coefficients (the skipped scaling cannot change any of the checks).
inline ClassificationReport classify(const SkewProduct& f, bool run_numeric = true,
                                     int filter_samples = 2000, double filter_tol = 1e-6,
                                     std::uint64_t seed = 11) {
    ClassificationReport rep;
    rep.analysis = symmetry_group(f, filter_samples, filter_tol, seed);
    const NormalizedSkew& nf = rep.analysis.norm;
    rep.uncertain = !rep.analysis.status.exact();

    bool p_mono = nf.p_is_monomial();
    bool bd_mono = nf.bd_is_monomial();
    bool only_wd = nf.q_is_bd_wd();
    bool coeffs_const = true;
    bool has_lower = false;
    for (int m = 0; m < nf.d; ++m)
        if (!nf.q_coeffs[std::size_t(m)].is_zero()) has_lower = true;
    for (int m = 0; m <= nf.d; ++m) {
        const RationalFn& c = nf.q_coeffs[std::size_t(m)];
        if (!c.is_zero() && !(c.is_polynomial() && c.num().degree() == 0)) coeffs_const = false;
    }

    if (p_mono && only_wd && bd_mono) {
        rep.tag = TypeTag::I;
    } else if (p_mono && coeffs_const && has_lower) {
        rep.tag = TypeTag::II;
        // the finite factor is the symmetry group of q(w)
        if (rep.analysis.group.kind == SymmetryGroup::Kind::OneDimFamily)
            rep.sigma_factor_order = rep.analysis.group.torsion;
    } else if (only_wd) {
        rep.tag = TypeTag::III;
        if (rep.analysis.group.kind == SymmetryGroup::Kind::OneDimFamily)
            rep.sigma_factor_order = rep.analysis.group.torsion;
    } else if (p_mono && nf.laurent_ok && bd_mono) {
        auto semi = detect_semiconjugacy(nf.q_norm, nf.delta, nf.d, nf.l);
        if (semi) {
            rep.tag = TypeTag::IV;
            semi->base_exact = nf.already_normal || (nf.c1.exact && nf.c2.exact);
            rep.witness = semi;
        } else {
            rep.tag = TypeTag::FiniteSym;
        }
    } else {
        rep.tag = TypeTag::FiniteSym;
    }

    // compactness: types (i), (ii), (iv) are compact; (iii) and finite
    // depend on whether b_d vanishes somewhere on J_p
    switch (rep.tag) {
        case TypeTag::I:
        case TypeTag::II:
        case TypeTag::IV:
            rep.compactness = Compactness::Compact;
            break;
        default:
            rep.compactness =
                run_numeric ? compactness_check(f) : Compactness::Uncertain;
            break;
    }

    rep.shape = julia_shape(rep);
    return rep;
}

} // namespace skewsym

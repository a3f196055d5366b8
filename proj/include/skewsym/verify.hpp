#pragma once

#include "skewsym/green.hpp"
#include "skewsym/normal_form.hpp"
#include "skewsym/sampler.hpp"
#include "skewsym/sigma.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace skewsym {

/// Projects x onto the fiberwise Julia set over z and returns the
/// displacement. Outside K_z this is a damped Newton walk on G_z (the
/// classical G/|grad G| distance estimate, iterated); at G = 0 the walk
/// switches to ray bisection towards the first positive-G crossing.
/// The projected points form the reference sampling of J_f used by
/// verify_symmetry_numeric.
inline double distance_to_fiber_julia(const GreenEvaluator& ev, Cplx z, Cplx x,
                                      double g_floor = 1e-11) {
    auto G = [&](Cplx w) { return ev.green_fiber(z, w).value; };
    double gx = G(x);
    if (gx > g_floor) {
        Cplx cur = x;
        double g = gx;
        for (int it = 0; it < 80 && g > g_floor; ++it) {
            double h = std::max(1e-9, 1e-7 * std::abs(cur));
            double dgr = (G(cur + h) - G(cur - h)) / (2 * h);
            double dgi = (G(cur + Cplx(0, h)) - G(cur - Cplx(0, h))) / (2 * h);
            double n2 = dgr * dgr + dgi * dgi;
            if (n2 < 1e-300) break;
            Cplx step = Cplx(dgr, dgi) * (g / n2);
            // damp long steps; G is only asymptotically linear in distance
            double cap = 0.5 * (1.0 + std::abs(cur));
            if (std::abs(step) > cap) step *= cap / std::abs(step);
            cur -= 0.8 * step;
            g = G(cur);
        }
        return std::abs(x - cur);
    }
    // interior (or on the set): march rays outward to the nearest escape
    double best = std::numeric_limits<double>::infinity();
    double reach = 2.0 * std::min(1e6, ev.fiber_escape_radius(z)) + 2.0 * std::abs(x);
    for (int r = 0; r < 8; ++r) {
        double th = 2.0 * M_PI * double(r) / 8.0 + 0.19;
        Cplx dir(std::cos(th), std::sin(th));
        double lo = 0.0, hi = 0.0;
        for (double t = 1e-6; t <= reach; t *= 2.0) {
            if (G(x + t * dir) > g_floor) {
                hi = t;
                break;
            }
            lo = t;
        }
        if (hi == 0.0) continue;
        for (int it = 0; it < 60 && (hi - lo) > 1e-12 * (1.0 + hi); ++it) {
            double mid = 0.5 * (lo + hi);
            if (G(x + mid * dir) > g_floor) hi = mid;
            else lo = mid;
        }
        best = std::min(best, hi);
    }
    return std::isfinite(best) ? best : 0.0; // nothing escapes: K_z fills the window
}

struct SymmetryCheck {
    bool pass = false;
    double max_deviation = 0.0;
    double tol = 0.0;
    int fibers = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Checks gamma(z,w) = (mu (z - zeta) + zeta, nu (w - zeta_z) + zeta_{sigma(z)})
/// against J_f: samples fiber boundary points over J_p, applies gamma and
/// measures how far the images sit from the fiberwise Julia sets they
/// should land on.
inline SymmetryCheck verify_symmetry_numeric(const SkewProduct& f, Cplx mu, Cplx nu,
                                             int sample_count, double tol,
                                             std::uint64_t seed = 7) {
    CentroidData cent = centroids(f);
    Cplx zeta = cent.zeta.to_complex();
    // 128 iterations resolve Green values far below the tolerances used
    // for symmetry verification
    GreenEvaluator ev(f, 128);

    int fibers = std::max(4, std::min(16, sample_count / 32));
    int per_fiber = std::max(1, sample_count / fibers);

    std::vector<Cplx> bases = sample_julia_base(f.p, fibers, seed);

    SymmetryCheck out;
    out.tol = tol;
    out.seed = seed;
    out.fibers = fibers;
    for (int i = 0; i < fibers; ++i) {
        Cplx z = bases[std::size_t(i)];
        Cplx zs = mu * (z - zeta) + zeta; // sigma(z)
        Cplx tz = cent.zeta_z.evaluate(z);
        Cplx tzs = cent.zeta_z.evaluate(zs);
        std::vector<Cplx> ws =
            sample_fiber_boundary(f, z, per_fiber, seed * 1315423911u + std::uint64_t(i));
        for (const Cplx& w : ws) {
            Cplx img = nu * (w - tz) + tzs;
            double dist = distance_to_fiber_julia(ev, zs, img);
            out.max_deviation = std::max(out.max_deviation, dist);
            ++out.samples;
        }
    }
    out.pass = out.samples > 0 && out.max_deviation <= tol;
    return out;
}

struct FilterResult {
    bool pass = false;
    double max_deviation = 0.0;
};

/// Necessary condition |b_d(sigma(z))| = |b_d(z)| on J_p for the base
/// component sigma(z) = mu (z - zeta) + zeta of any symmetry.
inline FilterResult lemma44_filter(const SkewProduct& f, Cplx mu, int sample_count = 2000,
                                   double tol = 1e-6, std::uint64_t seed = 11) {
    CentroidData cent = centroids(f);
    Cplx zeta = cent.zeta.to_complex();
    std::vector<Cplx> zs = sample_julia_base(f.p, sample_count, seed);
    FilterResult out;
    for (const Cplx& z : zs) {
        Cplx sz = mu * (z - zeta) + zeta;
        double dev = std::abs(std::abs(f.b[f.d].evaluate(sz)) - std::abs(f.b[f.d].evaluate(z)));
        out.max_deviation = std::max(out.max_deviation, dev);
    }
    out.pass = out.max_deviation <= tol;
    return out;
}

enum class Compactness { Compact, Noncompact, Uncertain };

inline const char* to_string(Compactness c) {
    switch (c) {
        case Compactness::Compact: return "compact";
        case Compactness::Noncompact: return "noncompact";
        default: return "uncertain";
    }
}

/// J_f is compact iff b_d has no root on J_p. Roots that are roots of
/// unity are detected exactly (cyclotomic gcd) when J_p is exactly the
/// unit circle; otherwise the root-to-sample distance decides, with a
/// gap [eps_near, eps_far] reported as uncertain.
inline Compactness compactness_check(const SkewProduct& f, int sample_count = 2000,
                                     double eps_near = 1e-2, double eps_far = 1e-1,
                                     std::uint64_t seed = 13) {
    if (f.l == 0) return Compactness::Compact; // constant b_d has no roots
    NormalizedSkew nf = normalize(f);
    const Poly1& bd = nf.bd_norm();

    if (nf.p_is_monomial() && nf.p_norm.is_monic()) {
        // J_p is exactly the unit circle (after centering)
        for (int m = 1; m <= 64; ++m) {
            Poly1 cyc = Poly1::monomial(m, ComplexRational(1)) - Poly1(ComplexRational(1));
            if (poly_gcd(bd, cyc).degree() > 0) return Compactness::Noncompact;
        }
    }

    RootResult roots = find_roots(poly_coeffs_complex(bd));
    if (!roots.converged && roots.residual > 1e-8) return Compactness::Uncertain;
    std::vector<Cplx> samples;
    try {
        // sample the centered J_p to match the centered roots
        samples = sample_julia_base(nf.p_norm, sample_count, seed);
    } catch (const error&) {
        return Compactness::Uncertain;
    }
    double dmin = std::numeric_limits<double>::infinity();
    for (const Cplx& r : roots.roots)
        for (const Cplx& s : samples) dmin = std::min(dmin, std::abs(r - s));
    if (dmin < eps_near) return Compactness::Noncompact;
    if (dmin > eps_far) return Compactness::Compact;
    return Compactness::Uncertain;
}

} // namespace skewsym

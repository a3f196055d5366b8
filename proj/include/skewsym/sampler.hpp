#pragma once

#include "skewsym/green.hpp"
#include "skewsym/roots.hpp"
#include "skewsym/skew_product.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace skewsym {

/// Samples J_p by inverse iteration: random backward orbits started at a
/// repelling fixed point (or, failing that, any fixed point with a longer
/// burn-in). Deterministic for a fixed seed.
struct BaseSampler {
    Poly1 p;
    std::uint64_t seed = 1;
    int burn_in = 32;

    std::vector<Cplx> sample(int count) const {
        if (p.degree() < 2) throw error("degree must be at least 2");
        std::mt19937_64 rng(seed);
        // fixed points: roots of p(z) - z
        Poly1 pz = p - Poly1::variable();
        RootResult fixed = find_roots(poly_coeffs_complex(pz));
        if (fixed.roots.empty()) throw error("failure to find bounded seed point");
        Poly1 dp = p.derivative();
        Cplx start = fixed.roots[0];
        double best = -1.0;
        for (const Cplx& r : fixed.roots) {
            double m = std::abs(dp.evaluate(r));
            if (m > best) {
                best = m;
                start = r;
            }
        }
        int warm = burn_in + (best > 1.0 + 1e-9 ? 0 : 32);

        std::vector<Cplx> out;
        out.reserve(std::size_t(count));
        Cplx z = start;
        std::uniform_int_distribution<int> pick(0, p.degree() - 1);
        int produced = 0, guard = 0;
        while (produced < count && guard < 1000 * (count + warm)) {
            ++guard;
            RootResult pre = solve_poly_equals(p, z);
            if (pre.roots.empty()) throw error("failure to find bounded seed point");
            z = pre.roots[std::size_t(pick(rng)) % pre.roots.size()];
            if (guard > warm) {
                out.push_back(z);
                ++produced;
            }
        }
        if (produced < count) throw error("failure to find bounded seed point");
        return out;
    }
};

inline std::vector<Cplx> sample_julia_base(const Poly1& p, int count, std::uint64_t seed) {
    BaseSampler s;
    s.p = p;
    s.seed = seed;
    return s.sample(count);
}

/// Samples the fiberwise Julia set boundary over a fixed base point z:
/// pull a circle of starting values back along the forward base orbit
/// z, p(z), ..., p^depth(z), choosing random preimages of the fiber maps.
/// The final fan-out doubles the yield per chain for free.
inline std::vector<Cplx> sample_fiber_boundary(const SkewProduct& f, Cplx z, int count,
                                               std::uint64_t seed, int depth = 24) {
    std::mt19937_64 rng(seed);
    std::vector<Cplx> orbit(std::size_t(depth) + 1);
    orbit[0] = z;
    for (int k = 1; k <= depth; ++k) orbit[std::size_t(k)] = f.p.evaluate(orbit[std::size_t(k - 1)]);

    GreenEvaluator ev(f);
    double r_top = ev.fiber_escape_radius(orbit[std::size_t(depth)]);
    if (r_top > 1e6) r_top = 1e6;

    // q(z_k, w) = target as a polynomial in w
    auto pullback = [&](int k, Cplx target) -> std::vector<Cplx> {
        std::vector<Cplx> cs(std::size_t(f.d) + 1, Cplx(0));
        for (int j = 0; j <= f.d; ++j) cs[std::size_t(j)] = f.b[j].evaluate(orbit[std::size_t(k)]);
        cs[0] -= target;
        return find_roots(std::move(cs)).roots;
    };

    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> pick(0, f.d - 1);
    std::vector<Cplx> out;
    out.reserve(std::size_t(count));
    int guard = 0;
    while (int(out.size()) < count && guard < 40 * count + 400) {
        ++guard;
        double th = angle(rng);
        Cplx w = 2.0 * r_top * Cplx(std::cos(th), std::sin(th));
        bool ok = true;
        for (int k = depth - 1; k >= 0 && ok; --k) {
            std::vector<Cplx> roots = pullback(k, w);
            if (roots.empty()) {
                ok = false;
                break;
            }
            w = roots[std::size_t(pick(rng)) % roots.size()];
        }
        if (ok && std::isfinite(w.real()) && std::isfinite(w.imag())) out.push_back(w);
    }
    return out;
}

} // namespace skewsym

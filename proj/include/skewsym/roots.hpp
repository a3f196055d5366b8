#pragma once

#include "skewsym/poly1.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace skewsym {

/// Aberth-Ehrlich simultaneous iteration for all roots of a polynomial
/// given by ascending coefficients. Converges cubically from the spread
/// initial circle; good to ~1e-13 residual for the small degrees used here.
struct RootResult {
    std::vector<Cplx> roots;
    bool converged = false;
    double residual = 0.0;
};

inline RootResult find_roots(std::vector<Cplx> coeffs, int max_iter = 200, double tol = 1e-13) {
    RootResult out;
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) {
        out.converged = !coeffs.empty();
        return out;
    }
    int n = int(coeffs.size()) - 1;
    if (n == 1) {
        out.roots = {-coeffs[0] / coeffs[1]};
        out.converged = true;
        return out;
    }

    auto eval = [&](Cplx x, Cplx& p, Cplx& dp) {
        p = coeffs[n];
        dp = 0;
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + coeffs[i];
        }
    };

    // initial guesses on a circle sized by the Cauchy bound, slightly
    // eccentric so symmetric configurations do not stall
    double r = 0.0;
    for (int i = 0; i < n; ++i) r = std::max(r, std::abs(coeffs[i] / coeffs[n]));
    r = 1.0 + r;
    std::vector<Cplx> x(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * (double(i) + 0.35) / double(n) + 0.4;
        x[i] = 0.65 * r * Cplx(std::cos(th), std::sin(th));
    }

    bool done = false;
    for (int it = 0; it < max_iter && !done; ++it) {
        done = true;
        for (int i = 0; i < n; ++i) {
            Cplx p, dp;
            eval(x[i], p, dp);
            if (std::abs(p) == 0.0) continue;
            Cplx newton = (dp != Cplx(0)) ? p / dp : Cplx(0);
            Cplx sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    Cplx diff = x[i] - x[j];
                    if (std::abs(diff) < 1e-300) diff = 1e-300;
                    sum += 1.0 / diff;
                }
            Cplx denom = 1.0 - newton * sum;
            Cplx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            x[i] -= step;
            if (std::abs(step) > tol * (1.0 + std::abs(x[i]))) done = false;
        }
    }
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        Cplx p, dp;
        eval(x[i], p, dp);
        res = std::max(res, std::abs(p));
    }
    out.roots = std::move(x);
    out.residual = res;
    out.converged = done;
    return out;
}

inline std::vector<Cplx> poly_coeffs_complex(const Poly1& p) {
    std::vector<Cplx> out(std::size_t(std::max(0, p.degree())) + 1, Cplx(0));
    for (auto& [n, c] : p.terms()) out[std::size_t(n)] = c.to_complex();
    return out;
}

/// Roots of p(z) = target.
inline RootResult solve_poly_equals(const Poly1& p, Cplx target, int max_iter = 200,
                                    double tol = 1e-13) {
    std::vector<Cplx> cs = poly_coeffs_complex(p);
    cs[0] -= target;
    return find_roots(std::move(cs), max_iter, tol);
}

} // namespace skewsym

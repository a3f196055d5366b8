#pragma once

#include "skewsym/poly1.hpp"
#include "skewsym/rational_fn.hpp"
#include "skewsym/skew_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace skewsym {

/// Polynomial skew product f(z,w) = (p(z), q(z,w)) with deg p = delta >= 2,
/// deg_w q = d >= 2 and leading fiber coefficient b_d(z) of degree l.
struct SkewProduct {
    Poly1 p;
    SkewPoly q;
    int delta = 0;
    int d = 0;
    int l = 0;
    std::vector<Poly1> b; // b[j] = coefficient of w^j, j = 0..d
    bool nondegenerate = false;

    std::string str() const { return "(" + p.str() + ", " + q.str() + ")"; }
};

inline SkewProduct validate(const Poly1& p, const SkewPoly& q) {
    SkewProduct f;
    f.p = p;
    f.q = q;
    if (!q.is_polynomial()) throw error("fiber component must be polynomial in z");
    f.delta = p.degree();
    if (f.delta < 2) throw error("base degree must be at least 2");
    f.d = q.w_degree();
    if (f.d < 2) throw error("fiber degree must be at least 2");
    f.b.resize(f.d + 1);
    for (int j = 0; j <= f.d; ++j) f.b[j] = q.w_coefficient_poly(j);
    if (f.b[f.d].is_zero()) throw error("leading fiber coefficient vanishes");
    f.l = f.b[f.d].degree();
    f.nondegenerate = (f.l == 0);
    return f;
}

/// Centroids: zeta = -a_{delta-1}/(delta a_delta), a point, and
/// zeta_z = -b_{d-1}(z)/(d b_d(z)), a rational function of z.
struct CentroidData {
    ComplexRational zeta;
    RationalFn zeta_z;
};

inline CentroidData centroids(const SkewProduct& f) {
    CentroidData c;
    c.zeta = -f.p.coeff(f.delta - 1) / (ComplexRational(f.delta) * f.p.leading());
    c.zeta_z = RationalFn(-f.b[f.d - 1], ComplexRational(f.d) * f.b[f.d]);
    return c;
}

/// n-th iterate (p^n, Q_z^n) computed exactly; Q_z^{k+1} = q(p^k(z), Q_z^k).
inline std::pair<Poly1, SkewPoly> iterate_symbolic(
    const SkewProduct& f, int n, std::size_t budget = SkewPoly::kDefaultTermBudget) {
    if (n < 1) throw error("iterate count must be positive");
    SkewPoly qn = f.q;
    Poly1 pk = f.p;
    for (int k = 1; k < n; ++k) {
        qn = f.q.substitute(pk, qn, budget);
        pk = f.p.compose(pk);
    }
    return {pk, qn};
}

} // namespace skewsym

#pragma once

#include "skewsym/lattice.hpp"
#include "skewsym/poly1.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace skewsym {

/// Symmetry group of a one-variable Julia set: rotations about the
/// centroid, either all of them or a finite cyclic group.
struct CircleGroup {
    bool infinite = false;
    std::int64_t order = 1; // meaningful when finite
    ComplexRational center;
};

/// Order of the rotation group of J_p for p with vanishing subleading
/// coefficient: the largest m with p(z) = z^r Q(z^m), i.e.
/// gcd{delta - j : a_j != 0, j < delta}; no such j means p = a z^delta
/// and the group is infinite (nullopt).
inline std::optional<std::int64_t> sigma_order(const Poly1& p) {
    int delta = p.degree();
    if (delta < 2) throw error("degree must be at least 2");
    if (!p.coeff(delta - 1).is_zero()) throw error("normalize first");
    std::int64_t g = 0;
    for (auto& [j, c] : p.terms())
        if (j < delta) g = std::gcd(g, std::int64_t(delta - j));
    if (g == 0) return std::nullopt;
    return g;
}

/// Full one-variable engine: translate the centroid to the origin
/// (scaling is support-invariant and skipped), then read off the order.
inline CircleGroup sigma_group(const Poly1& p) {
    int delta = p.degree();
    if (delta < 2) throw error("degree must be at least 2");
    CircleGroup g;
    g.center = -p.coeff(delta - 1) / (ComplexRational(delta) * p.leading());
    Poly1 pn = p.shift(g.center) - Poly1(g.center);
    auto ord = sigma_order(pn);
    g.infinite = !ord.has_value();
    g.order = ord.value_or(0);
    return g;
}

/// Character conditions forced on the base rotation by p sigma = sigma^delta p:
/// {(delta - j, 0) : a_j != 0, j < delta} for normalized p.
inline std::vector<Vec2> base_condition_vectors(const Poly1& p_norm) {
    int delta = p_norm.degree();
    if (!p_norm.coeff(delta - 1).is_zero()) throw error("normalize first");
    std::vector<Vec2> out;
    for (auto& [j, c] : p_norm.terms())
        if (j < delta) out.push_back({std::int64_t(delta - j), 0});
    return out;
}

} // namespace skewsym

#pragma once

#include "skewsym/normal_form.hpp"
#include "skewsym/rational_turn.hpp"
#include "skewsym/skew_product.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <set>
#include <vector>

namespace skewsym {

inline std::vector<RationalTurn> turns_up_to_order(std::int64_t max_order) {
    std::vector<RationalTurn> out;
    for (std::int64_t m = 1; m <= max_order; ++m)
        for (std::int64_t k = 0; k < m; ++k)
            if (std::gcd(k, m) == 1) out.push_back(RationalTurn(k, m));
    std::sort(out.begin(), out.end());
    return out;
}

/// l_n = l (delta^n - d^n)/(delta - d), the mu-exponent in the level-n
/// intertwining map; equals l * n * delta^{n-1} when delta = d.
inline std::int64_t level_exponent(int l, int delta, int d, int n) {
    std::int64_t acc = 0, dp = 1;
    for (int i = 0; i < n; ++i) {
        std::int64_t term = 1;
        for (int j = 0; j < n - 1 - i; ++j) term *= d;
        for (int j = 0; j < i; ++j) term *= delta;
        acc += term;
        (void)dp;
    }
    return std::int64_t(l) * acc;
}

/// Independent oracle for the symmetry group: enumerate all rational-turn
/// pairs with orders up to max_order and keep those satisfying the
/// level-n equations f^n gamma = gamma_n f^n for n <= depth, read
/// term-by-term off the exact iterate supports in normalized coordinates.
inline std::vector<TurnPair> brute_force_group(const SkewProduct& f, std::int64_t max_order = 12,
                                               int depth = 4,
                                               std::size_t budget = SkewPoly::kDefaultTermBudget) {
    NormalizedSkew nf = normalize(f);
    if (!nf.laurent_ok) throw error("bounds mode required");
    bool laurent = !nf.q_norm.is_polynomial();
    if (laurent && !nf.p_norm.is_monomial()) throw error("non-monomial denominator");

    // level-n condition vectors from the iterate supports
    std::set<std::pair<std::int64_t, std::int64_t>> vecs;
    Poly1 pn = nf.p_norm;
    SkewPoly qn = nf.q_norm;
    Poly1 pk = nf.p_norm;
    std::int64_t delta_n = nf.delta;
    std::int64_t d_n = nf.d;
    for (int n = 1; n <= depth; ++n) {
        if (n > 1) {
            qn = nf.q_norm.substitute(pk, qn, budget);
            pk = nf.p_norm.compose(pk);
            delta_n *= nf.delta;
            d_n *= nf.d;
        }
        std::int64_t ln = level_exponent(nf.l, nf.delta, nf.d, n);
        for (auto& [j, c] : pk.terms())
            if (std::int64_t(j) != delta_n) vecs.insert({delta_n - j, 0});
        for (auto& [key, c] : qn.terms()) {
            std::int64_t a = key.first - ln, b = key.second - d_n;
            if (a != 0 || b != 0) vecs.insert({a, b});
        }
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> conds(vecs.begin(), vecs.end());

    std::vector<RationalTurn> turns = turns_up_to_order(max_order);
    auto satisfies = [&](const RationalTurn& mu, const RationalTurn& nu) {
        for (auto& [a, b] : conds) {
            // mu^a nu^b == 1, on angles: a*k_mu/m_mu + b*k_nu/m_nu in Z
            std::int64_t num = a * mu.k * nu.m + b * nu.k * mu.m;
            std::int64_t den = mu.m * nu.m;
            if (num % den != 0) return false;
        }
        return true;
    };

    std::size_t n_threads = 2;
    std::size_t chunk = (turns.size() + n_threads - 1) / n_threads;
    std::vector<std::future<std::vector<TurnPair>>> futs;
    for (std::size_t t0 = 0; t0 < turns.size(); t0 += chunk) {
        std::size_t t1 = std::min(turns.size(), t0 + chunk);
        futs.push_back(std::async(std::launch::async, [&, t0, t1] {
            std::vector<TurnPair> local;
            for (std::size_t i = t0; i < t1; ++i)
                for (const RationalTurn& nu : turns)
                    if (satisfies(turns[i], nu)) local.push_back({turns[i], nu});
            return local;
        }));
    }
    std::vector<TurnPair> found;
    for (auto& fu : futs) {
        auto part = fu.get();
        found.insert(found.end(), part.begin(), part.end());
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace skewsym

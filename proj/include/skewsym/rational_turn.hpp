#pragma once

#include "skewsym/complex_rational.hpp"

#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>

namespace skewsym {

/// Root of unity exp(2*pi*i*k/m) stored as the reduced fraction k/m with
/// 0 <= k < m. Group arithmetic (angles mod 1) stays exact, so membership
/// and equality questions about torus points are decidable.
struct RationalTurn {
    std::int64_t k = 0;
    std::int64_t m = 1;

    RationalTurn() = default;
    RationalTurn(std::int64_t kk, std::int64_t mm) {
        if (mm == 0) throw error("turn denominator must be nonzero");
        if (mm < 0) { mm = -mm; kk = -kk; }
        kk %= mm;
        if (kk < 0) kk += mm;
        std::int64_t g = std::gcd(kk, mm);
        if (g == 0) g = 1;
        k = kk / g;
        m = mm / g;
    }

    static RationalTurn one() { return {}; }

    bool is_one() const { return k == 0; }
    std::int64_t order() const { return m; }

    friend RationalTurn operator*(const RationalTurn& a, const RationalTurn& b) {
        return RationalTurn(a.k * b.m + b.k * a.m, a.m * b.m);
    }
    RationalTurn inverse() const { return RationalTurn(-k, m); }
    RationalTurn pow(std::int64_t e) const {
        std::int64_t ke = (k % m) * (e % m);
        return RationalTurn(ke, m);
    }

    friend bool operator==(const RationalTurn& a, const RationalTurn& b) {
        return a.k == b.k && a.m == b.m;
    }
    friend bool operator!=(const RationalTurn& a, const RationalTurn& b) { return !(a == b); }
    friend bool operator<(const RationalTurn& a, const RationalTurn& b) {
        return std::pair(a.k * b.m, a.m) < std::pair(b.k * a.m, b.m);
    }

    std::complex<double> to_complex() const {
        double theta = 2.0 * 3.14159265358979323846 * double(k) / double(m);
        return {std::cos(theta), std::sin(theta)};
    }

    /// Exact complex value when it lies in Q(i), i.e. m in {1,2,4}.
    bool exact_value(ComplexRational& out) const {
        if (m == 1) { out = ComplexRational(1); return true; }
        if (m == 2) { out = ComplexRational(-1); return true; }
        if (m == 4) {
            out = (k == 1) ? ComplexRational::i() : -ComplexRational::i();
            return true;
        }
        return false;
    }

    std::string str() const { return std::to_string(k) + "/" + std::to_string(m); }
};

using TurnPair = std::pair<RationalTurn, RationalTurn>;

} // namespace skewsym

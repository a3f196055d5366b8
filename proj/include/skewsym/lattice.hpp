#pragma once

#include "skewsym/complex_rational.hpp"
#include "skewsym/rational_turn.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace skewsym {

using Vec2 = std::array<std::int64_t, 2>;

/// Subgroup of Z^2 in canonical Hermite form. Rank 2 is stored as rows
/// [[a,b],[0,c]] with a,c > 0 and 0 <= b < c; rank 1 as a single vector
/// with positive leading entry. The form is unique per subgroup, so
/// equality of subgroups is equality of the representation.
class IntLattice2 {
public:
    IntLattice2() = default;

    int rank() const { return rank_; }
    const std::vector<Vec2>& basis() const { return basis_; }

    std::int64_t det() const {
        if (rank_ != 2) return 0;
        return basis_[0][0] * basis_[1][1];
    }

    bool contains(const Vec2& v) const {
        if (v[0] == 0 && v[1] == 0) return true;
        if (rank_ == 0) return false;
        if (rank_ == 1) {
            const Vec2& b = basis_[0];
            if (b[0] == 0) return v[0] == 0 && v[1] % b[1] == 0;
            if (v[0] % b[0] != 0) return false;
            std::int64_t t = v[0] / b[0];
            return v[1] == t * b[1];
        }
        std::int64_t a = basis_[0][0], b = basis_[0][1], c = basis_[1][1];
        if (v[0] % a != 0) return false;
        std::int64_t x = v[0] / a;
        return (v[1] - x * b) % c == 0;
    }

    bool contains(const IntLattice2& other) const {
        for (const Vec2& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    friend bool operator==(const IntLattice2& a, const IntLattice2& b) {
        return a.rank_ == b.rank_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const IntLattice2& a, const IntLattice2& b) { return !(a == b); }

    friend IntLattice2 hnf_basis(const std::vector<Vec2>& gens);

private:
    // Gaussian elimination over Z with extended-gcd row combinations;
    // row0 holds the pivot in the first coordinate, row1 in the second.
    void insert(Vec2 v) {
        if (v[0] != 0) {
            if (!has0_) {
                row0_ = v;
                has0_ = true;
            } else {
                // combine so row0 gets gcd of leading entries
                std::int64_t a = row0_[0], b = v[0];
                auto [g, x, y] = ext_gcd(a, b);
                Vec2 comb{g, x * row0_[1] + y * v[1]};
                Vec2 rem{0, (a / g) * v[1] - (b / g) * row0_[1]};
                row0_ = comb;
                v = rem;
            }
        }
        if (v[1] != 0 && v[0] == 0) {
            if (!has1_) {
                row1_ = v;
                has1_ = true;
            } else {
                row1_[1] = std::gcd(row1_[1], v[1]);
            }
        }
    }

    void canonicalize() {
        if (has1_ && row1_[1] < 0) row1_[1] = -row1_[1];
        if (has0_ && row0_[0] < 0) {
            row0_[0] = -row0_[0];
            row0_[1] = -row0_[1];
        }
        if (has0_ && has1_) {
            std::int64_t c = row1_[1];
            std::int64_t b = ((row0_[1] % c) + c) % c;
            row0_[1] = b;
            rank_ = 2;
            basis_ = {row0_, row1_};
        } else if (has0_) {
            rank_ = 1;
            basis_ = {row0_};
        } else if (has1_) {
            rank_ = 1;
            basis_ = {row1_};
        } else {
            rank_ = 0;
            basis_.clear();
        }
    }

    static std::array<std::int64_t, 3> ext_gcd(std::int64_t a, std::int64_t b) {
        if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
        std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
            t = y0 - q * y1;
            y0 = y1;
            y1 = t;
        }
        if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
        return {a, x0, y0};
    }

    int rank_ = 0;
    std::vector<Vec2> basis_;
    bool has0_ = false, has1_ = false;
    Vec2 row0_{0, 0}, row1_{0, 0};
};

/// Canonical basis of the subgroup of Z^2 generated by `gens`.
inline IntLattice2 hnf_basis(const std::vector<Vec2>& gens) {
    IntLattice2 L;
    for (const Vec2& v : gens) L.insert(v);
    L.canonicalize();
    return L;
}

/// Structure of Z^2 / L for a finite-index L: invariant factors d1 | d2
/// with d1*d2 = |det|, plus torus points generating the annihilator
/// group {(mu,nu) : mu^a nu^b = 1 for all (a,b) in L}, which is
/// isomorphic to the quotient.
struct SnfQuotient {
    std::int64_t d1 = 1;
    std::int64_t d2 = 1;
    TurnPair gen1; // order d1 (trivial when d1 == 1)
    TurnPair gen2; // order d2
};

inline SnfQuotient snf_quotient(const IntLattice2& L) {
    if (L.rank() != 2) throw error("not finite index");
    // B = basis rows; find U B V = diag(d1, d2) and keep V.
    std::int64_t B[2][2] = {{L.basis()[0][0], L.basis()[0][1]},
                            {L.basis()[1][0], L.basis()[1][1]}};
    std::int64_t V[2][2] = {{1, 0}, {0, 1}};
    auto col_op = [&](int i, int j, std::int64_t q) { // col_j -= q * col_i
        B[0][j] -= q * B[0][i];
        B[1][j] -= q * B[1][i];
        V[0][j] -= q * V[0][i];
        V[1][j] -= q * V[1][i];
    };
    auto col_swap = [&]() {
        std::swap(B[0][0], B[0][1]);
        std::swap(B[1][0], B[1][1]);
        std::swap(V[0][0], V[0][1]);
        std::swap(V[1][0], V[1][1]);
    };
    auto row_op = [&](int i, int j, std::int64_t q) { // row_j -= q * row_i
        B[j][0] -= q * B[i][0];
        B[j][1] -= q * B[i][1];
    };
    for (int guard = 0; guard < 256; ++guard) {
        // clear B[0][1] and B[1][0] by Euclidean steps
        if (B[0][0] == 0) {
            if (B[0][1] != 0) col_swap();
            else std::swap(B[0][0], B[1][0]), std::swap(B[0][1], B[1][1]);
            continue;
        }
        if (B[0][1] % B[0][0] != 0) {
            col_op(0, 1, B[0][1] / B[0][0]);
            col_swap();
            continue;
        }
        if (B[1][0] % B[0][0] != 0) {
            row_op(0, 1, B[1][0] / B[0][0]);
            std::swap(B[0][0], B[1][0]), std::swap(B[0][1], B[1][1]);
            continue;
        }
        col_op(0, 1, B[0][1] / B[0][0]);
        row_op(0, 1, B[1][0] / B[0][0]);
        // divisibility: d1 must divide d2
        if (B[1][1] % B[0][0] != 0) {
            col_op(1, 0, -1); // col_0 += col_1, reintroduces coupling
            continue;
        }
        break;
    }
    SnfQuotient out;
    std::int64_t d1 = B[0][0] < 0 ? -B[0][0] : B[0][0];
    std::int64_t d2 = B[1][1] < 0 ? -B[1][1] : B[1][1];
    out.d1 = d1;
    out.d2 = d2;
    // annihilator generators: columns of V scaled by 1/d_i
    out.gen1 = {RationalTurn(V[0][0], d1), RationalTurn(V[1][0], d1)};
    out.gen2 = {RationalTurn(V[0][1], d2), RationalTurn(V[1][1], d2)};
    return out;
}

} // namespace skewsym

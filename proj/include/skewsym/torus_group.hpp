#pragma once

#include "skewsym/lattice.hpp"
#include "skewsym/rational_turn.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace skewsym {

/// chi_{(a,b)}(mu, nu) = mu^a nu^b, evaluated exactly on rational turns.
inline RationalTurn character(const Vec2& v, const TurnPair& t) {
    return t.first.pow(v[0]) * t.second.pow(v[1]);
}

/// Closed subgroup of the 2-torus, stored as the annihilator of a
/// condition lattice L: all (mu,nu) with mu^a nu^b = 1 for (a,b) in L.
///   rank 0 -> the full torus
///   rank 1 -> one-dimensional family {(mu,nu) : (mu^a nu^b)^e = 1}
///             with (a,b) primitive and torsion e (= number of components)
///   rank 2 -> finite abelian, Z/d1 x Z/d2 with explicit generators
struct SymmetryGroup {
    enum class Kind { FullTorus, OneDimFamily, Finite };

    Kind kind = Kind::FullTorus;
    IntLattice2 lattice;

    // OneDimFamily
    Vec2 char_vec{0, 0};
    std::int64_t torsion = 1;

    // Finite
    std::int64_t d1 = 1, d2 = 1;
    TurnPair gen1, gen2;

    bool is_infinite() const { return kind != Kind::Finite; }
    std::int64_t order() const { return kind == Kind::Finite ? d1 * d2 : 0; }

    bool contains(const TurnPair& t) const {
        for (const Vec2& v : lattice.basis())
            if (!character(v, t).is_one()) return false;
        return true;
    }

    /// All elements of a finite group, at most `cap` of them.
    std::vector<TurnPair> elements(std::int64_t cap = 4096) const {
        std::vector<TurnPair> out;
        if (kind != Kind::Finite || order() > cap) return out;
        for (std::int64_t i = 0; i < d1; ++i)
            for (std::int64_t j = 0; j < d2; ++j)
                out.push_back({gen1.first.pow(i) * gen2.first.pow(j),
                               gen1.second.pow(i) * gen2.second.pow(j)});
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    friend bool operator==(const SymmetryGroup& a, const SymmetryGroup& b) {
        return a.lattice == b.lattice;
    }
    friend bool operator!=(const SymmetryGroup& a, const SymmetryGroup& b) { return !(a == b); }

    std::string str() const {
        auto chr = [&](const Vec2& v, std::int64_t e) {
            std::string lhs;
            auto pw = [](const std::string& s, std::int64_t n) {
                if (n == 0) return std::string();
                if (n == 1) return s;
                return s + "^" + std::to_string(n);
            };
            std::int64_t a = v[0] * e, b = v[1] * e;
            if (a != 0 && b < 0) return pw("mu", a) + " = " + pw("nu", -b);
            if (b != 0 && a < 0) return pw("nu", b) + " = " + pw("mu", -a);
            std::string l = pw("mu", a), r = pw("nu", b);
            if (l.empty()) return r + " = 1";
            if (r.empty()) return l + " = 1";
            return l + "*" + r + " = 1";
        };
        switch (kind) {
            case Kind::FullTorus: return "S1 x S1";
            case Kind::OneDimFamily: return "{(mu,nu) : " + chr(char_vec, torsion) + "}";
            case Kind::Finite: {
                std::string s = "finite of order " + std::to_string(d1 * d2) + " {";
                for (const Vec2& v : lattice.basis()) s += " " + chr(v, 1) + ";";
                return s + " }";
            }
        }
        return "";
    }
};

/// The torus subgroup annihilating every character in L.
inline SymmetryGroup annihilator(const IntLattice2& L) {
    SymmetryGroup g;
    g.lattice = L;
    switch (L.rank()) {
        case 0:
            g.kind = SymmetryGroup::Kind::FullTorus;
            break;
        case 1: {
            g.kind = SymmetryGroup::Kind::OneDimFamily;
            Vec2 v = L.basis()[0];
            std::int64_t e = std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]);
            g.char_vec = {v[0] / e, v[1] / e};
            g.torsion = e;
            break;
        }
        case 2: {
            g.kind = SymmetryGroup::Kind::Finite;
            SnfQuotient q = snf_quotient(L);
            g.d1 = q.d1;
            g.d2 = q.d2;
            g.gen1 = q.gen1;
            g.gen2 = q.gen2;
            break;
        }
    }
    return g;
}

/// {mu : mu^t = 1} x S^1 as a torus subgroup; t == 0 means the full torus.
inline SymmetryGroup mu_factor_times_circle(std::int64_t t) {
    if (t == 0) return annihilator(IntLattice2());
    return annihilator(hnf_basis({Vec2{t, 0}}));
}

} // namespace skewsym

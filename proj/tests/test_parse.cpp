#include "skewsym/skewsym.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace skewsym;

TEST_CASE("parse_map reads the spec grammar", "[parse]") {
    SkewProduct f = parse_map("(z^3, z*w^2 + z)");
    CHECK(f.delta == 3);
    CHECK(f.d == 2);
    CHECK(f.l == 1);

    SkewProduct g = parse_map("((1/2)z^2 + i, w^2)");
    CHECK(g.p.leading() == ComplexRational(Rational(1, 2)));
    CHECK(g.p.coeff(0) == ComplexRational::i());

    SkewProduct h = parse_map("(z^2, (1/2+1/3i)*z*w^2 + 2i*w + 1)");
    CHECK(h.b[2].coeff(1) == ComplexRational(Rational(1, 2), Rational(1, 3)));
    CHECK(h.b[1].coeff(0) == ComplexRational(Rational(0), Rational(2)));
}

TEST_CASE("parse errors carry positions and reasons", "[parse]") {
    CHECK_THROWS_AS(parse_map("(w, z)"), error);
    CHECK_THROWS_WITH(parse_map("(w, z)"), "first component must depend only on z");
    CHECK_THROWS_AS(parse_map("(z^2 + $, w^2)"), ParseError);
    CHECK_THROWS_AS(parse_map("(z^2, w^2"), ParseError);
    CHECK_THROWS_AS(parse_map("(z^(1/2), w^2)"), ParseError);
    CHECK_THROWS_AS(parse_map("(z^2, w^1/2)"), ParseError);
    CHECK_THROWS_AS(parse_map(""), ParseError);
    try {
        parse_map("(z^2, w^2) trailing");
    } catch (const ParseError& e) {
        CHECK(e.position >= 10);
    }
}

TEST_CASE("ast round-trip: parse, print, parse is the identity", "[parse]") {
    for (const std::string& text :
         {"(z^3, z*w^2 + z)", "((1/2)z^2 + i, w^2)", "(z^2 - 1, z^2*w^2)",
          "(2*z^2 + 4*z, w^2)", "(z^2, (z^3 - 1)*w^2)", "(z^2, z^3*w^5 + z*w^3 + w^2)",
          "(z^2, (1/2+1/3i)*z*w^2 + 2i*w + 1)", "(z^2, w^2 - 1/2)"}) {
        MapExpression a = parse_map_expression(text);
        MapExpression b = parse_map_expression(a.str());
        INFO(text << " -> " << a.str());
        CHECK(expr_equal(a.first, b.first));
        CHECK(expr_equal(a.second, b.second));
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("round-trip on random expressions", "[parse]") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> coeff(1, 9), den(1, 9), ez(0, 4), ew(0, 4), nt(1, 5),
        kind(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::string q;
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) {
            if (t) q += (kind(rng) < 2) ? " - " : " + ";
            switch (kind(rng)) {
                case 0: q += std::to_string(coeff(rng)); break;
                case 1: q += std::to_string(coeff(rng)) + "/" + std::to_string(den(rng)) + "i"; break;
                case 2: q += "z^" + std::to_string(ez(rng)) + "*w^" + std::to_string(ew(rng)); break;
                case 3: q += "(" + std::to_string(coeff(rng)) + " + i)*w^" + std::to_string(ew(rng)); break;
                case 4: q += "i*z*w"; break;
                default: q += std::to_string(coeff(rng)) + "*z^" + std::to_string(ez(rng)); break;
            }
        }
        std::string text = "(z^2, " + q + ")";
        MapExpression a = parse_map_expression(text);
        MapExpression b = parse_map_expression(a.str());
        INFO(text << " -> " << a.str());
        CHECK(expr_equal(a.second, b.second));
        CHECK(a.str() == b.str());
        // printing is also semantically faithful
        CHECK(lower_expr(a.second) == lower_expr(b.second));
    }
}

TEST_CASE("polynomial printing round-trips through the parser", "[parse]") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coeff(-4, 4), ez(0, 3), ew(0, 3), nt(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        SkewPoly q;
        for (int t = 0; t < nt(rng); ++t)
            q.add_term(ez(rng), ew(rng),
                       ComplexRational(Rational(coeff(rng)), Rational(coeff(rng))));
        if (q.is_zero()) continue;
        detail::ExprParser p(q.str());
        ExprPtr e = p.parse_expression();
        REQUIRE(p.at_end());
        CHECK(lower_expr(e) == q);
    }
}

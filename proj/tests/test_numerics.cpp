#include "skewsym/skewsym.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <random>

using namespace skewsym;

namespace {

double frand(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace

TEST_CASE("aberth root finder", "[numerics]") {
    // z^3 - 1
    RootResult r = find_roots({-1.0, 0.0, 0.0, 1.0});
    REQUIRE(r.roots.size() == 3);
    CHECK(r.residual < 1e-10);
    for (const Cplx& x : r.roots) CHECK(std::abs(std::pow(x, 3) - 1.0) < 1e-9);

    // Wilkinson-lite
    std::vector<Cplx> c{24.0, -50.0, 35.0, -10.0, 1.0}; // (z-1)(z-2)(z-3)(z-4)
    RootResult w = find_roots(c);
    double best = 1e9;
    for (const Cplx& x : w.roots) best = std::min(best, std::abs(x - 3.0));
    CHECK(best < 1e-8);
}

TEST_CASE("green base values and functional equation", "[numerics]") {
    GreenEvaluator e2(parse_map("(z^2, w^2)"));
    CHECK(e2.green_base(Cplx(2, 0)) == Catch::Approx(std::log(2.0)).margin(1e-10));
    CHECK(e2.green_base(Cplx(0.5, 0)) == 0.0);

    GreenEvaluator eb(parse_map("(z^2 - 1, w^2)"));
    CHECK(eb.green_base(Cplx(0, 0)) == 0.0);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Cplx z(frand(rng, -2, 2), frand(rng, -2, 2));
        double g = eb.green_base(z);
        Cplx pz = z * z - 1.0;
        CHECK(eb.green_base(pz) == Catch::Approx(2.0 * g).margin(1e-9));
    }
}

TEST_CASE("fiber green values", "[numerics]") {
    GreenEvaluator ev(parse_map("(z^2, z*w^2)"));
    FiberGreen g = ev.green_fiber(Cplx(1, 0), Cplx(2, 0));
    CHECK_FALSE(g.phi_degenerate);
    CHECK(g.value == Catch::Approx(std::log(2.0)).margin(1e-9));

    GreenEvaluator e2(parse_map("(z^2, w^2)"));
    CHECK(e2.green_fiber(Cplx(0.3, 0.2), Cplx(std::exp(0.3), 0)).value ==
          Catch::Approx(0.3).margin(1e-9));

    // functional equation on example 4.3
    SkewProduct f = parse_map("(z^3, z*w^2 + z^3)");
    GreenEvaluator e3(f);
    std::mt19937_64 rng(9);
    std::vector<Cplx> zs = sample_julia_base(f.p, 50, 3);
    for (const Cplx& z : zs) {
        Cplx w(frand(rng, -2, 2), frand(rng, -2, 2));
        FiberGreen gz = e3.green_fiber(z, w);
        if (gz.phi_degenerate) continue;
        Cplx pz = f.p.evaluate(z);
        Cplx qw = f.q.evaluate(z, w);
        FiberGreen gf = e3.green_fiber(pz, qw);
        CHECK(std::abs(gf.value - 2.0 * gz.value) < 1e-8);
    }
}

TEST_CASE("phi series", "[numerics]") {
    // constant b_d: all summands vanish
    GreenEvaluator e2(parse_map("(z^2, w^2)"));
    PhiResult p0 = e2.phi_sum(Cplx(0.7, 0.1));
    CHECK(p0.status == PhiStatus::Converged);
    CHECK(p0.value == 0.0);

    // (z^2, z w^2): |b_d(p^n z)| = 1 on the unit circle
    GreenEvaluator ez(parse_map("(z^2, z*w^2)"));
    PhiResult p1 = ez.phi_sum(std::polar(1.0, 0.77));
    CHECK(p1.status == PhiStatus::Converged);
    CHECK(std::abs(p1.value) < 1e-9);

    // orbit lands exactly on a root of b_d
    GreenEvaluator ed(parse_map("(z^2, (z - 1)*w^2)"));
    PhiResult pd = ed.phi_sum(Cplx(-1.0, 0.0));
    CHECK(pd.status == PhiStatus::Degenerate);
    CHECK(std::isinf(pd.value));
}

TEST_CASE("bottcher coordinate", "[numerics]") {
    // pure power fibers: phi = w
    GreenEvaluator e2(parse_map("(z^2, w^2)"));
    Cplx w(3.0, 1.0);
    CHECK(std::abs(e2.bottcher_fiber(Cplx(0.5, 0.5), w) - w) < 1e-12);

    // example 4.1: |phi_z(w) - (w - zeta_z)| -> 0, zeta_z = 0
    SkewProduct f = parse_map("(z^3, z*w^2 + z)");
    GreenEvaluator ev(f);
    Cplx z = std::polar(1.0, 1.234);
    double prev = 1e9;
    for (double mag : {1e3, 1e4, 1e5, 1e6}) {
        Cplx ww = std::polar(mag, 0.3);
        double dev = std::abs(ev.bottcher_fiber(z, ww) - ww);
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 1e-4);

    // functional equation phi_{p(z)}(q_z(w)) = b_d(z) phi_z(w)^d
    Cplx wq(1e3, 210.0);
    Cplx lhs = ev.bottcher_fiber(f.p.evaluate(z), f.q.evaluate(z, wq));
    Cplx phi = ev.bottcher_fiber(z, wq);
    Cplx rhs = f.b[2].evaluate(z) * phi * phi;
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);

    // green-bottcher consistency: log|c_z phi_z(w)| = G_z(w)
    PhiResult ph = ev.phi_sum(z);
    REQUIRE(ph.status == PhiStatus::Converged);
    double gb = std::log(std::abs(std::exp(ph.value) * phi));
    CHECK(std::abs(gb - ev.green_fiber(z, wq).value) < 1e-6);

    CHECK_THROWS_WITH(ev.bottcher_fiber(z, Cplx(0.1, 0.0)), "shrink to larger |w|");
}

TEST_CASE("base sampler hits the julia set", "[numerics]") {
    std::vector<Cplx> circle = sample_julia_base(Poly1::from_terms({{2, ComplexRational(1)}}), 200, 42);
    REQUIRE(circle.size() == 200);
    for (const Cplx& z : circle) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);

    Poly1 cheb = Poly1::from_terms({{2, ComplexRational(1)}, {0, ComplexRational(-2)}});
    std::vector<Cplx> seg = sample_julia_base(cheb, 200, 42);
    for (const Cplx& z : seg) {
        CHECK(std::abs(z.imag()) < 1e-6);
        CHECK(z.real() > -2.0 - 1e-9);
        CHECK(z.real() < 2.0 + 1e-9);
    }

    // seeded determinism
    std::vector<Cplx> again = sample_julia_base(Poly1::from_terms({{2, ComplexRational(1)}}), 200, 42);
    REQUIRE(again.size() == circle.size());
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i] == circle[i]);
}

TEST_CASE("fiber boundary sampler lands on tiny green values", "[numerics]") {
    SkewProduct f = parse_map("(z^3, z*w^2 + z^3)");
    GreenEvaluator ev(f);
    Cplx z = std::polar(1.0, 0.4);
    std::vector<Cplx> pts = sample_fiber_boundary(f, z, 40, 99);
    REQUIRE(pts.size() == 40);
    for (const Cplx& w : pts) CHECK(ev.green_fiber(z, w).value < 1e-5);
}

TEST_CASE("render slice format and boundary", "[numerics]") {
    SkewProduct f = parse_map("(z^2, w^2)");
    GreenEvaluator ev(f);
    JuliaSlice s = render_slice(ev, Cplx(1, 0), Cplx(0, 0), 4.0, 256);
    CHECK(s.green.size() == 256u * 256u);
    REQUIRE_FALSE(s.boundary_points.empty());
    double px = 4.0 / 256;
    for (const Cplx& w : s.boundary_points) CHECK(std::abs(std::abs(w) - 1.0) < 2 * px);

    std::string path = "render_test.pgm";
    write_pgm(s, path);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string magic;
    int wpx, hpx, maxv;
    in >> magic >> wpx >> hpx >> maxv;
    CHECK(magic == "P5");
    CHECK(wpx == 256);
    CHECK(hpx == 256);
    CHECK(maxv == 255);
    in.get();
    std::vector<char> data(256 * 256);
    in.read(data.data(), long(data.size()));
    CHECK(in.gcount() == long(data.size()));
    in.close();
    std::remove(path.c_str());

    // forward invariance at the green-value level: G(f(pt)) = d G(pt)
    for (std::size_t i = 0; i < std::min<std::size_t>(24, s.boundary_points.size()); ++i) {
        Cplx w = s.boundary_points[i];
        double g = ev.green_fiber(Cplx(1, 0), w).value;
        double gi = ev.green_fiber(f.p.evaluate(Cplx(1, 0)), f.q.evaluate(Cplx(1, 0), w)).value;
        CHECK(gi == Catch::Approx(2.0 * g).margin(1e-9));
    }
}

TEST_CASE("lemma 4.4 filter", "[numerics]") {
    SkewProduct f45 = parse_map("(z^2, (z^2 - 1)*w^2)");
    CHECK(lemma44_filter(f45, Cplx(1, 0), 400).pass);
    CHECK(lemma44_filter(f45, Cplx(-1, 0), 400).pass);
    FilterResult bad = lemma44_filter(f45, std::polar(1.0, 2.0 * M_PI / 3.0), 400);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_deviation > 1e-2);

    SkewProduct f42 = parse_map("(z^2 - 1, z^2*w^2)");
    CHECK(lemma44_filter(f42, Cplx(-1, 0), 400).pass); // b_d(-z) = b_d(z)
}

TEST_CASE("numeric symmetry verification discriminates", "[numerics]") {
    SkewProduct f = parse_map("(z^2 - 1, z^2*w^2)");
    SymmetryCheck ok = verify_symmetry_numeric(f, Cplx(-1, 0), std::polar(1.0, 0.83), 128, 1e-3);
    CHECK(ok.pass);
    SymmetryCheck id = verify_symmetry_numeric(f, Cplx(1, 0), Cplx(1, 0), 128, 1e-3);
    CHECK(id.pass);
    SymmetryCheck bad = verify_symmetry_numeric(f, Cplx(0, 1), Cplx(1, 0), 128, 1e-3);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_deviation > 1e-2);
}

TEST_CASE("compactness three cases", "[numerics]") {
    CHECK(compactness_check(parse_map("(z^2, w^2 + z)")) == Compactness::Compact);
    CHECK(compactness_check(parse_map("(z^2, (z - 1)*w^2)"), 400) == Compactness::Noncompact);
    CHECK(compactness_check(parse_map("(z^2, (z - 3)*w^2)"), 400) == Compactness::Compact);
}

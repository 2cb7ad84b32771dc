#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leb/meshsim.hpp"
#include "leb/sampling.hpp"
#include "leb/spectral.hpp"

using namespace leb;

namespace {

ShapePoint pt(long xn, long xd, long sn, long sd, long d = 1) {
    return ShapePoint(make_rat(xn, xd), make_rat(sn, sd), d);
}

void check_triple_oracle(const ShapePoint& z, int max_j) {
    OrbitRecord orb = compute_orbit(z);
    BisectionGraph g = build_graph(orb);
    AdjMatrix a = adjacency_matrix(g);
    for (int j = 0; j <= max_j; ++j) {
        std::vector<Int> planar = simulate(z, j, orb);
        std::vector<Int> tree = tree_expand(z, j, orb);
        std::vector<Int> matrix = collapse_counts(counts_at_step(a, j, g.entry), g, orb.size());
        CHECK(planar == tree);
        CHECK(tree == matrix);
    }
}

}  // namespace

TEST_CASE("seed triangle") {
    PlanarTriangle t = seed_triangle(zeta());
    CHECK(t.v[0].x.is_zero());
    CHECK(t.v[0].y.is_zero());
    CHECK(t.v[1].x == QuadVal(Rat(1), 1));
    CHECK(t.v[2].x == QuadVal(make_rat(1, 2), 1));
    CHECK(t.v[2].y == QuadVal(make_rat(1, 2), 1));

    PlanarTriangle eq = seed_triangle(ShapePoint(make_rat(1, 2), make_rat(1, 2), 3));
    CHECK(eq.v[2].y == QuadVal(Rat(0), make_rat(1, 2), 3));

    // key round trip: seed's key equals the shape-space key
    RationalSampler sampler(51);
    for (int i = 0; i < 200; ++i) {
        ShapePoint z = sampler.point_in([](const ShapePoint&) { return true; });
        CHECK(shape_key(seed_triangle(z)) == shape_key(z));
    }
}

TEST_CASE("bisect splits the longest edge and halves the area") {
    PlanarTriangle t = seed_triangle(pt(1, 9, 1, 7));
    auto [c1, c2] = bisect(t);
    QuadVal area = t.signed_area2();
    CHECK(c1.signed_area2() + c2.signed_area2() == area);
    CHECK(sign(c1.signed_area2() - c2.signed_area2()) == 0);

    // both children of the right isosceles seed are right isosceles again
    auto [z1, z2] = bisect(seed_triangle(zeta()));
    CHECK(shape_key(z1) == shape_key(zeta()));
    CHECK(shape_key(z2) == shape_key(zeta()));

    // equilateral splits into two congruent 30-60-90 classes
    auto [e1, e2] = bisect(seed_triangle(ShapePoint(make_rat(1, 2), make_rat(1, 2), 3)));
    CHECK(shape_key(e1) == shape_key(e2));
    CHECK(shape_key(e1) == shape_key(ShapePoint(make_rat(1, 4), make_rat(1, 4), 3)));
}

TEST_CASE("mirror soundness") {
    // reflecting the seed leaves every key unchanged
    RationalSampler sampler(52);
    for (int i = 0; i < 100; ++i) {
        ShapePoint z = sampler.point_in([](const ShapePoint&) { return true; });
        PlanarTriangle t = seed_triangle(z);
        PlanarTriangle mirror = t;
        for (auto& v : mirror.v) v.y = -v.y;
        CHECK(shape_key(mirror) == shape_key(t));
        auto [a1, a2] = bisect(t);
        auto [b1, b2] = bisect(mirror);
        CHECK(shape_key(a1) == shape_key(b1));
        CHECK(shape_key(a2) == shape_key(b2));
    }
}

TEST_CASE("simulate counts") {
    // all descendants of zeta remain zeta
    OrbitRecord zorb = compute_orbit(zeta());
    std::vector<Int> zc = simulate(zeta(), 5, zorb);
    CHECK(zc == std::vector<Int>{32});

    // generic region-I point two steps in: (2, 0, 0, 2) in discovery order
    ShapePoint z = pt(1, 3, 2, 3);
    OrbitRecord orb = compute_orbit(z);
    std::vector<Int> c = simulate(z, 2, orb);
    CHECK(c[0] == 2);
    CHECK(c[orb.right_succ[orb.right_succ[0]]] == 2);
    CHECK(c[orb.left_succ[0]] == 0);
    CHECK(c[orb.right_succ[0]] == 0);

    // conservation
    Int total = 0;
    for (const Int& v : simulate(pt(1, 9, 1, 7), 8, compute_orbit(pt(1, 9, 1, 7)))) total += v;
    CHECK(total == 256);

    CHECK_THROWS_AS(simulate(zeta(), 30, zorb), Error);  // over the cap
}

TEST_CASE("tree expansion basics") {
    OrbitRecord orb = compute_orbit(zeta());
    CHECK(tree_expand(zeta(), 0, orb) == std::vector<Int>{1});
    CHECK(tree_expand(zeta(), 1, orb) == std::vector<Int>{2});
}

TEST_CASE("triple oracle agreement") {
    check_triple_oracle(zeta(), 10);
    check_triple_oracle(pt(1, 9, 1, 7), 10);
    check_triple_oracle(ShapePoint(make_rat(1, 2), make_rat(1, 2), 3), 10);    // Re = 1/2
    check_triple_oracle(ShapePoint(make_rat(2, 5), make_rat(1, 10), 34), 10);  // |z| = sqrt2/2
    check_triple_oracle(ShapePoint(make_rat(7, 16), make_rat(1, 16), 47), 10); // |z-1| = sqrt2/2
    check_triple_oracle(pt(1, 16, 1, 16), 10);
    RationalSampler sampler(53);
    for (int i = 0; i < 5; ++i)
        check_triple_oracle(sampler.point_in([](const ShapePoint&) { return true; }), 8);
}

TEST_CASE("terminal area fraction") {
    OrbitRecord zorb = compute_orbit(zeta());
    CHECK(terminal_area_fraction(zeta(), 6, zorb) == Rat(1));
    ShapePoint z = pt(1, 3, 2, 3);
    OrbitRecord orb = compute_orbit(z);
    CHECK(terminal_area_fraction(z, 3, orb) == Rat(1));  // all quadruple members terminal

    // decay for a deeper orbit: fractions increase towards 1
    ShapePoint f = pt(1, 9, 1, 7);
    OrbitRecord forb = compute_orbit(f);
    Rat prev = terminal_area_fraction(f, 4, forb);
    for (int j = 6; j <= 14; j += 2) {
        Rat cur = terminal_area_fraction(f, j, forb);
        CHECK(sign(cur - prev) >= 0);
        prev = cur;
    }
    CHECK(sign(prev - make_rat(9, 10)) > 0);
}

TEST_CASE("minimum angle never drops below half the seed angle") {
    for (const ShapePoint& z : {zeta(), pt(1, 9, 1, 7), pt(1, 3, 2, 3),
                                ShapePoint(make_rat(1, 2), make_rat(1, 2), 3)}) {
        double alpha0 = min_angle_deg(z);
        std::vector<PlanarTriangle> mesh{seed_triangle(z)};
        for (int step = 0; step < 8; ++step) {
            std::vector<PlanarTriangle> next;
            for (const PlanarTriangle& t : mesh) {
                auto [a, b] = bisect(t);
                next.push_back(a);
                next.push_back(b);
            }
            mesh.swap(next);
        }
        for (const PlanarTriangle& t : mesh) CHECK(min_angle_deg(t) >= alpha0 / 2 - 1e-9);
    }
}

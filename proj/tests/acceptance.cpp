// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Tolerances are pinned here and nowhere else.
#include <cmath>
#include <complex>
#include <iomanip>
#include <iostream>
#include <vector>

#include "leb/io.hpp"
#include "leb/meshsim.hpp"
#include "leb/sampling.hpp"
#include "leb/spectral.hpp"

using namespace leb;

namespace {

int failures = 0;

void report(int idx, const std::string& title, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << std::setw(2) << idx << " [" << (ok ? "PASS" : "FAIL") << "] " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

ShapePoint pt(long xn, long xd, long sn, long sd, long d = 1) {
    return ShapePoint(make_rat(xn, xd), make_rat(sn, sd), d);
}

ShapePoint fig8a() { return ShapePoint(make_rat(1, 1700), make_rat(1, 1700), 3399); }
ShapePoint fig8b() { return ShapePoint(make_rat(1, 100), make_rat(1, 1700), 3399); }

// exact point on |z|^2 = r2 at abscissa x
ShapePoint on_circle0(const Rat& x, const Rat& r2) {
    auto [s, d] = rat_sqrt_decompose(r2 - x * x);
    return ShapePoint(x, s, d);
}
ShapePoint on_circle1(const Rat& x, const Rat& r2) {
    auto [s, d] = rat_sqrt_decompose(r2 - (x - 1) * (x - 1));
    return ShapePoint(x, s, d);
}
ShapePoint on_circle_half(const Rat& x) {
    auto [s, d] = rat_sqrt_decompose(make_rat(1, 4) - (x - make_rat(1, 2)) * (x - make_rat(1, 2)));
    return ShapePoint(x, s, d);
}

struct Model {
    OrbitRecord orb;
    BisectionGraph g;
    AdjMatrix a;
};

Model model_of(const ShapePoint& z) {
    Model m{compute_orbit(z), {}, {}};
    m.g = build_graph(m.orb);
    m.a = adjacency_matrix(m.g);
    return m;
}

std::vector<ShapePoint> grid_points_i_to_iv(long denom) {
    std::vector<ShapePoint> out;
    for (long a = 1; 2 * a <= denom; ++a)
        for (long b = 1; b <= denom; ++b) {
            ShapePoint z(make_rat(a, denom), make_rat(b, denom), 1);
            if (!z.in_domain()) continue;
            Region r = classify(z);
            if (r == Region::I || r == Region::II || r == Region::III || r == Region::IV)
                out.push_back(z);
        }
    return out;
}

void criterion_1() {
    bool ok = true;
    std::string detail;
    ok &= q_of(compute_orbit(pt(1, 9, 1, 7))) == 3;
    OrbitRecord a = compute_orbit(fig8a());
    ok &= a.size() == 19 && q_of(a) == 1;
    OrbitRecord b = compute_orbit(fig8b());
    ok &= b.size() == 109 && q_of(b) == 6;
    report(1, "reference q and l values (q=3; l=19,q=1; l=109,q=6)", ok);
}

void criterion_2() {
    bool ok = compute_orbit(zeta()).size() == 1;
    int n2 = 0, n3 = 0;
    // |z| = sqrt2/2 inside the terminal region, zeta excluded: x in (1/4, 1/2)
    for (long k = 0; k < 20; ++k) {
        ShapePoint z = on_circle0(make_rat(26 + k, 104), make_rat(1, 2));
        if (is_terminal(z) && z != zeta() && compute_orbit(z).size() == 2) ++n2;
    }
    // |z-1| = sqrt2/2 inside the terminal region: x in (3/8, 1/2)
    for (long k = 0; k < 20; ++k) {
        ShapePoint z = on_circle1(make_rat(121 + 2 * k, 320), make_rat(1, 2));
        if (is_terminal(z) && compute_orbit(z).size() == 2) ++n2;
    }
    // |z-1/2| = 1/2 inside the terminal region: x in (1/4, 1/2)
    for (long k = 0; k < 20; ++k) {
        ShapePoint z = on_circle_half(make_rat(26 + k, 104));
        if (is_terminal(z) && compute_orbit(z).size() == 3) ++n3;
    }
    // Re = 1/2 inside the terminal region, zeta excluded: s^2 d in (1/4, 3/4]
    for (long k = 1; k <= 20; ++k) {
        auto [s, d] = rat_sqrt_decompose(make_rat(1, 4) + make_rat(k, 40));
        ShapePoint z(make_rat(1, 2), s, d);
        if (is_terminal(z) && compute_orbit(z).size() == 3) ++n3;
    }
    ok &= n2 == 40 && n3 == 40;
    report(2, "small-orbit loci (l=1 at zeta; l=2 and l=3 arcs, 20 points each)", ok,
           "l=2 hits " + std::to_string(n2) + "/40, l=3 hits " + std::to_string(n3) + "/40");
}

void criterion_3() {
    std::vector<ShapePoint> pts = grid_points_i_to_iv(64);
    int bad = 0;
    for (const ShapePoint& z : pts)
        if (q_of(compute_orbit(z)) != 1) ++bad;
    report(3, "q = 1 across regions I-IV on the 1/64 grid", pts.size() >= 500 && bad == 0,
           std::to_string(pts.size()) + " points, " + std::to_string(bad) + " exceptions");
}

void criterion_4() {
    bool ok = true;
    for (unsigned m = 1; m <= 5; ++m) {
        Int denom = Int(1) << (m + 3);
        ShapePoint z(make_rat(Int(1), denom), make_rat(Int(1), denom), 1);
        ok &= q_of(compute_orbit(z)) > (1 << m);
    }
    for (unsigned m = 2; m <= 5; ++m) {
        ShapePoint w = region_vi_witness(m);
        ok &= classify(w) == Region::VI;
        ok &= q_of(compute_orbit(w)) > (1 << (m - 2));
    }
    report(4, "unbounded q witnesses (zeta/2^(m+2) and region-VI images)", ok);
}

void criterion_5() {
    RationalSampler sampler(101);
    int bad = 0;
    for (Region r : {Region::I, Region::II, Region::III})
        for (int i = 0; i < 1000; ++i) {
            ShapePoint z = sampler.point_in_region(r);
            if (apply_L(apply_R(z)) != z) ++bad;
            detail::QC w = detail::qc_conj(detail::make_qc(z));
            ShapePoint rr = detail::to_point(
                detail::qc_div(w, detail::qc_sub_rat(detail::qc_scale(w, Rat(2)), Rat(1))));
            if (apply_R(apply_R(z)) != rr) ++bad;
        }
    for (Region r : {Region::II, Region::III})
        for (int i = 0; i < 1000; ++i) {
            ShapePoint z = sampler.point_in_region(r);
            if (apply_L(z) != apply_L(apply_R(apply_R(z)))) ++bad;
        }
    for (int i = 0; i < 1000; ++i) {
        ShapePoint z = sampler.point_in_region(Region::IV);
        if (apply_L(apply_L(z)) != apply_L(apply_R(z))) ++bad;
    }
    for (int i = 0; i < 1000; ++i) {
        ShapePoint z = sampler.point_in([](const ShapePoint& w) {
            if (!in_v_tilde(w) || !in_v_tilde(h_map(w))) return false;
            return in_v_tilde(apply_L(w)) && classify(h_map(h_map(w))) == Region::V;
        });
        if (apply_L(h_map(h_map(z))) != h_map(apply_L(z))) ++bad;
    }
    bool h_val = h_map(pt(1, 4, 1, 4)) == pt(1, 5, 2, 5);
    report(5, "map identities (LR, RR, LRR, LL=LR, L h^2 = h L, h(1/4+i/4))", bad == 0 && h_val,
           std::to_string(bad) + " identity failures");
}

void criterion_6() {
    std::vector<ShapePoint> seeds{pt(1, 9, 1, 7), fig8a(), fig8b(), zeta()};
    for (unsigned m = 1; m <= 5; ++m) {
        Int denom = Int(1) << (m + 3);
        seeds.push_back(ShapePoint(make_rat(Int(1), denom), make_rat(Int(1), denom), 1));
    }
    for (unsigned m = 2; m <= 5; ++m) seeds.push_back(region_vi_witness(m));
    for (const ShapePoint& z : grid_points_i_to_iv(16)) seeds.push_back(z);
    int bad = 0, cells_checked = 0;
    for (const ShapePoint& z : seeds) {
        OrbitRecord orb = compute_orbit(z);
        for (const auto& cell : terminal_quadruples(orb)) {
            ++cells_checked;
            QuadVal ref = zeta_radius_invariant(orb.points[cell.members[0]]);
            for (int m : cell.members)
                if (zeta_radius_invariant(orb.points[m]) != ref) ++bad;
        }
    }
    report(6, "quadruples lie on exact hyperbolic circles about zeta", bad == 0,
           std::to_string(cells_checked) + " cells, " + std::to_string(bad) + " deviations");
}

std::vector<ShapePoint> spectral_sample() {
    RationalSampler sampler(102);
    std::vector<ShapePoint> zs;
    for (Region r : {Region::I, Region::II, Region::III, Region::IV, Region::V, Region::VI})
        for (int i = 0; i < 33; ++i) zs.push_back(sampler.point_in_region(r));
    zs.push_back(zeta());
    zs.push_back(ShapePoint(make_rat(1, 2), make_rat(1, 2), 3));    // Re = 1/2
    zs.push_back(ShapePoint(make_rat(2, 5), make_rat(1, 10), 34));  // |z| = sqrt2/2
    zs.push_back(ShapePoint(make_rat(7, 16), make_rat(1, 16), 47)); // |z-1| = sqrt2/2
    return zs;
}

void criterion_7() {
    int bad = 0;
    std::vector<ShapePoint> zs = spectral_sample();
    for (const ShapePoint& z : zs) {
        Model m = model_of(z);
        for (int j = 0; j < m.a.n; ++j) {
            int col = 0;
            for (int i = 0; i < m.a.n; ++i) col += m.a.at(i, j);
            if (col != 2) ++bad;
        }
        if (std::abs(spectral_radius(spectrum(m.a)) - 2.0) > 1e-9) ++bad;
        int q = q_of(m.orb);
        if (exact_eigenspace_dim(m.a, 2) != q) ++bad;
        if (exact_eigenspace_dim(m.a, -2) != q) ++bad;
        for (int j : {1, 5, 20}) {
            CountVector v = counts_at_step(m.a, j, m.g.entry);
            Int total = 0;
            for (const Int& c : v.counts) total += c;
            if (total != Int(1) << j) ++bad;
        }
    }
    report(7, "spectral identities on " + std::to_string(zs.size()) + " points", bad == 0,
           std::to_string(bad) + " violations");
}

void criterion_8() {
    int bad = 0;
    std::vector<ShapePoint> zs{zeta(), pt(1, 9, 1, 7), fig8a(), pt(1, 16, 1, 16),
                               ShapePoint(make_rat(1, 2), make_rat(1, 2), 3)};
    RationalSampler sampler(103);
    for (int i = 0; i < 45; ++i) zs.push_back(sampler.point_in([](const ShapePoint&) { return true; }));
    for (const ShapePoint& z : zs) {
        Model m = model_of(z);
        LimitDistributions lim = limit_distributions(m.a, m.g.entry);
        double se = 0, so = 0;
        for (int v = 0; v < m.a.n; ++v) {
            if (lim.w_even(v) < -1e-12 || lim.w_odd(v) < -1e-12) ++bad;
            se += lim.w_even(v);
            so += lim.w_odd(v);
            if (!is_terminal(m.orb.points[m.g.collapse[v]]) &&
                (std::abs(lim.w_even(v)) > 1e-11 || std::abs(lim.w_odd(v)) > 1e-11))
                ++bad;
        }
        if (std::abs(se - 1.0) > 1e-12 || std::abs(so - 1.0) > 1e-12) ++bad;
        Eigen::MatrixXd half = to_dense(m.a) / 2.0;
        if ((half * lim.w_even - lim.w_odd).lpNorm<Eigen::Infinity>() > 1e-12) ++bad;
        // exponential envelope with C fitted over j = 2..20
        double xi = convergence_rate(spectrum(m.a));
        auto nonterm = [&](int j) {
            std::vector<Int> counts = collapse_counts(counts_at_step(m.a, j, m.g.entry), m.g, m.orb.size());
            Rat f = 0;
            for (int c = 0; c < m.orb.size(); ++c)
                if (!is_terminal(m.orb.points[c])) f += make_rat(counts[c], Int(1) << j);
            return f.get_d();
        };
        double C = 0;
        for (int j = 2; j <= 20; ++j) C = std::max(C, nonterm(j) / std::pow(xi, j));
        for (int j = 2; j <= 20; ++j)
            if (nonterm(j) > C * std::pow(xi, j) * (1 + 1e-9)) ++bad;
    }
    report(8, "limit distributions and xi-envelope on " + std::to_string(zs.size()) + " points",
           bad == 0, std::to_string(bad) + " violations");
}

std::vector<ShapePoint> mesh_sample() {
    std::vector<ShapePoint> zs{zeta(), pt(1, 9, 1, 7),
                               ShapePoint(make_rat(1, 2), make_rat(1, 2), 3),
                               ShapePoint(make_rat(2, 5), make_rat(1, 10), 34),
                               ShapePoint(make_rat(7, 16), make_rat(1, 16), 47)};
    RationalSampler sampler(104);
    while (zs.size() < 25) zs.push_back(sampler.point_in([](const ShapePoint&) { return true; }));
    return zs;
}

void criterion_9_and_10() {
    int bad = 0;
    double worst_margin = 1e9;
    std::vector<ShapePoint> zs = mesh_sample();
    for (const ShapePoint& z : zs) {
        Model m = model_of(z);
        for (int j = 0; j <= 10; ++j) {
            std::vector<Int> planar = simulate(z, j, m.orb);
            std::vector<Int> tree = tree_expand(z, j, m.orb);
            std::vector<Int> matrix = collapse_counts(counts_at_step(m.a, j, m.g.entry), m.g, m.orb.size());
            if (planar != tree || tree != matrix) ++bad;
        }
        // angle bound over the union of all meshes (classes reached = orbit)
        double alpha0 = min_angle_deg(z);
        for (const ShapePoint& p : m.orb.points)
            worst_margin = std::min(worst_margin, min_angle_deg(p) - (alpha0 / 2 - 1e-9));
    }
    report(9, "triple-oracle mesh agreement, 25 points, all j <= 10", bad == 0,
           std::to_string(bad) + " step mismatches");
    report(10, "minimum angle >= alpha0/2 - 1e-9 over all criterion-9 meshes", worst_margin >= 0.0,
           "worst margin " + std::to_string(worst_margin) + " deg");
}

void criterion_11() {
    int bad = 0, pairs = 0;
    {
        double eps = hyperbolic_distance(fig8a(), fig8b()) + 1e-9;
        ++pairs;
        if (!perturbation_containment(fig8a(), fig8b(), eps)) ++bad;
    }
    RationalSampler sampler(105);
    while (pairs < 50) {
        ShapePoint z = sampler.point_in([](const ShapePoint&) { return true; });
        ShapePoint w(z.x + make_rat(1, 8192), z.s, 1);
        if (!w.in_domain()) w = ShapePoint(z.x - make_rat(1, 8192), z.s, 1);
        double eps = hyperbolic_distance(z, w) + 1e-9;
        ++pairs;
        if (!perturbation_containment(z, w, eps)) ++bad;
    }
    report(11, "perturbation containment on 50 pairs incl. the reference pair", bad == 0,
           std::to_string(bad) + " failures");
}

void criterion_12() {
    // flags are computed and REPORTED for a sweep; they never gate the suite
    std::vector<ShapePoint> pts;
    for (long a = 1; 2 * a <= 16; ++a)
        for (long b = 1; b <= 16; ++b) {
            ShapePoint z(make_rat(a, 16), make_rat(b, 16), 1);
            if (z.in_domain()) pts.push_back(z);
        }
    int in_set = 0, bip = 0, diag = 0;
    for (const ShapePoint& z : pts) {
        Model m = model_of(z);
        ConjectureFlags f = conjecture_report(m.a, m.g);
        in_set += f.spectrum_in_set;
        bip += f.bipartite;
        diag += f.diagonalizable;
    }
    report(12, "open-problem flags reported (non-asserting)", true,
           "of " + std::to_string(pts.size()) + " rows: spectrum_in_set " + std::to_string(in_set) +
               ", bipartite " + std::to_string(bip) + ", diagonalizable " + std::to_string(diag));
}

}  // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9_and_10();
        criterion_11();
        criterion_12();
    } catch (const Error& e) {
        std::cout << "acceptance aborted [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "leb/errors.hpp"
#include "leb/shapespace.hpp"

namespace leb {

// LEB(z) in BFS discovery order (z first, L child before R child) with total
// successor maps. Finiteness is the FSC theorem; the cap guards bugs only.
struct OrbitRecord {
    std::vector<ShapePoint> points;
    std::vector<int> left_succ;
    std::vector<int> right_succ;
    std::vector<Region> region;
    std::vector<Geodesic> genericity;

    int size() const { return static_cast<int>(points.size()); }
    bool generic() const {
        return std::all_of(genericity.begin(), genericity.end(),
                           [](Geodesic g) { return g == Geodesic::None; });
    }
};

inline constexpr std::size_t kOrbitSafetyCap = 1'000'000;

inline OrbitRecord compute_orbit(const ShapePoint& z, std::size_t cap = kOrbitSafetyCap) {
    z.require_in_domain();
    OrbitRecord orb;
    std::map<std::pair<Rat, Rat>, int> index;
    auto intern = [&](const ShapePoint& p) -> int {
        auto [it, fresh] = index.try_emplace({p.x, p.s}, orb.size());
        if (fresh) {
            if (orb.points.size() >= cap) throw safety_cap_exceeded(cap);
            orb.points.push_back(p);
            orb.region.push_back(classify(p));
            orb.genericity.push_back(on_genericity_geodesic(p));
            orb.left_succ.push_back(-1);
            orb.right_succ.push_back(-1);
        }
        return it->second;
    };
    intern(z);
    for (std::size_t i = 0; i < orb.points.size(); ++i) {
        ShapePoint p = orb.points[i];  // copy: vector may reallocate below
        orb.left_succ[i] = intern(apply_L(p));
        orb.right_succ[i] = intern(apply_R(p));
    }
    return orb;
}

namespace detail {

// Closure of region I: x >= 1/4 and |z - 1/2| >= 1/2. The closure (not the
// boundary-convention region label) is what matters for terminal membership:
// orbit points can land exactly on Re = 1/4, where the label convention sends
// them to II even though the dynamics treat them as region-I points.
inline bool in_closure_of_i(const ShapePoint& z) {
    if (!z.in_domain()) return false;
    if (sign(z.x - make_rat(1, 4)) < 0) return false;
    Rat t3 = (z.x - make_rat(1, 2)) * (z.x - make_rat(1, 2)) + z.s * z.s * z.d - make_rat(1, 4);
    return sign(t3) >= 0;
}

}  // namespace detail

// Membership in the terminal region A = cl(I) u R(cl(I)). The inverse of R on
// I u II u III is L on IV (LR = id there), so R(I) = { w in IV : L(w) in I }.
inline bool is_terminal(const ShapePoint& z) {
    if (detail::in_closure_of_i(z)) return true;
    if (classify(z) != Region::IV) return false;
    return detail::in_closure_of_i(apply_L(z));
}

// One periodic cell {w, L(w), R(w), RR(w)} of the terminal dynamics; fewer
// than 4 distinct members when w is non-generic.
struct TerminalQuadruple {
    std::vector<int> members;  // orbit indices, representative (in cl(I)) first
};

inline std::vector<TerminalQuadruple> terminal_quadruples(const OrbitRecord& orb) {
    int n = orb.size();
    std::vector<bool> terminal(n), assigned(n, false);
    for (int i = 0; i < n; ++i) terminal[i] = is_terminal(orb.points[i]);
    std::vector<TerminalQuadruple> cells;
    for (int i = 0; i < n; ++i) {
        if (!terminal[i] || assigned[i] || !detail::in_closure_of_i(orb.points[i])) continue;
        int l = orb.left_succ[i];
        int r = orb.right_succ[i];
        int rr = orb.right_succ[r];
        TerminalQuadruple cell;
        for (int m : {i, l, r, rr})
            if (std::find(cell.members.begin(), cell.members.end(), m) == cell.members.end())
                cell.members.push_back(m);
        for (int m : cell.members) {
            if (!terminal[m])
                throw inconsistent_terminal_set("cell member " + point_str(orb.points[m]) + " is not terminal");
            if (assigned[m])
                throw inconsistent_terminal_set("cell member " + point_str(orb.points[m]) + " assigned twice");
            assigned[m] = true;
        }
        // closed under L and R
        for (int m : cell.members)
            for (int succ : {orb.left_succ[m], orb.right_succ[m]})
                if (std::find(cell.members.begin(), cell.members.end(), succ) == cell.members.end())
                    throw inconsistent_terminal_set("successor leaves the cell of " + point_str(orb.points[i]));
        cells.push_back(std::move(cell));
    }
    for (int i = 0; i < n; ++i)
        if (terminal[i] && !assigned[i])
            throw inconsistent_terminal_set("terminal point " + point_str(orb.points[i]) + " not covered by any cell");
    return cells;
}

inline int q_of(const OrbitRecord& orb) { return static_cast<int>(terminal_quadruples(orb).size()); }

// l(z) for z in A, by the exact geodesic tests of the small-orbit
// classification, cross-checked against direct enumeration.
inline int small_orbit_class(const ShapePoint& z) {
    if (!is_terminal(z)) throw not_in_terminal_region();
    int predicted;
    if (z == zeta()) {
        predicted = 1;
    } else {
        Geodesic g = on_genericity_geodesic(z);
        if (g == Geodesic::AbsRoot2 || g == Geodesic::AbsMinus1Root2) {
            predicted = 2;
        } else if (g == Geodesic::ReHalf ||
                   (z.x - make_rat(1, 2)) * (z.x - make_rat(1, 2)) + z.s * z.s * z.d == make_rat(1, 4)) {
            predicted = 3;
        } else {
            predicted = 4;
        }
    }
    int actual = compute_orbit(z).size();
    if (actual != predicted)
        throw inconsistent_terminal_set("small-orbit classification disagrees with enumeration at " + point_str(z));
    return predicted;
}

// h = L o R on V-tilde, in closed form -z/(z-1).
inline ShapePoint h_map(const ShapePoint& z) {
    if (!in_v_tilde(z)) throw outside_v_tilde();
    detail::QC w = detail::make_qc(z);
    ShapePoint out = detail::to_point(detail::qc_div(detail::qc_neg(w), detail::qc_sub_rat(w, Rat(1))));
    out.require_in_domain();
    return out;
}

// zeta / 2^(m+2) with m minimal (m >= 1) such that 2^m >= n; q of the result
// exceeds 2^m and in particular n.
inline ShapePoint high_q_witness(unsigned n) {
    unsigned m = 1;
    while ((1u << m) < n) ++m;
    Int denom = Int(1) << (m + 3);
    return ShapePoint(make_rat(1, denom), make_rat(1, denom), 1);
}

// The region-VI witness R(zeta / 2^m); lands in VI for every m >= 2.
inline ShapePoint region_vi_witness(unsigned m) {
    Int denom = Int(1) << (m + 1);
    return apply_R(ShapePoint(make_rat(1, denom), make_rat(1, denom), 1));
}

// Cor.-style continuity: every point of LEB(w) lies within eps of LEB(z).
inline bool perturbation_containment(const ShapePoint& z, const ShapePoint& w, double eps,
                                     double slack = 1e-9) {
    if (!(hyperbolic_distance(z, w) < eps)) throw points_not_eps_close();
    OrbitRecord oz = compute_orbit(z);
    OrbitRecord ow = compute_orbit(w);
    for (const ShapePoint& pw : ow.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const ShapePoint& pz : oz.points) best = std::min(best, hyperbolic_distance(pw, pz));
        if (!(best <= eps + slack)) return false;
    }
    return true;
}

}  // namespace leb

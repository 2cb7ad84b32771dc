#pragma once

#include <array>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "leb/errors.hpp"
#include "leb/orbit.hpp"
#include "leb/quadval.hpp"
#include "leb/shapespace.hpp"

namespace leb {

// Planar ground truth: actual triangles with exact Q(sqrt(d)) coordinates.
struct PlanarPoint {
    QuadVal x;
    QuadVal y;
};

inline QuadVal sq_dist(const PlanarPoint& p, const PlanarPoint& q) {
    QuadVal dx = p.x - q.x;
    QuadVal dy = p.y - q.y;
    return dx * dx + dy * dy;
}

struct PlanarTriangle {
    std::array<PlanarPoint, 3> v;

    // twice the signed area
    QuadVal signed_area2() const {
        return (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y);
    }

    // squared edge lengths in the fixed order (v0v1, v1v2, v2v0)
    std::array<QuadVal, 3> sq_sides() const {
        return {sq_dist(v[0], v[1]), sq_dist(v[1], v[2]), sq_dist(v[2], v[0])};
    }
};

// Canonical similarity key: squared sides over the largest, sorted descending
// -> (1, r1, r2) with 1 >= r1 >= r2. Mirror images collapse automatically.
struct ShapeKey {
    QuadVal r1;
    QuadVal r2;

    friend bool operator<(const ShapeKey& a, const ShapeKey& b) {
        int c = sign(a.r1 - b.r1);
        if (c != 0) return c < 0;
        return sign(a.r2 - b.r2) < 0;
    }
    friend bool operator==(const ShapeKey& a, const ShapeKey& b) { return a.r1 == b.r1 && a.r2 == b.r2; }
};

inline ShapeKey shape_key(const PlanarTriangle& t) {
    auto s = t.sq_sides();
    // sort the three descending
    if (s[0] < s[1]) std::swap(s[0], s[1]);
    if (s[1] < s[2]) std::swap(s[1], s[2]);
    if (s[0] < s[1]) std::swap(s[0], s[1]);
    return {s[1] / s[0], s[2] / s[0]};
}

// In D the longest side is 1 and |z| <= |z-1| <= 1, so the key of the class z
// is (|z-1|^2, |z|^2) directly.
inline ShapeKey shape_key(const ShapePoint& z) {
    return {QuadVal(z.abs_minus1_2(), z.d), QuadVal(z.abs2(), z.d)};
}

inline PlanarTriangle seed_triangle(const ShapePoint& z) {
    z.require_in_domain();
    QuadVal zero(Rat(0), z.d), one(Rat(1), z.d);
    return {{{{zero, zero}, {one, zero}, {QuadVal(z.x, z.d), QuadVal(Rat(0), z.s, z.d)}}}};
}

// Split along a longest edge (ties: lowest edge index in the fixed order).
inline std::pair<PlanarTriangle, PlanarTriangle> bisect(const PlanarTriangle& t) {
    auto s = t.sq_sides();
    int k = 0;
    if (sign(s[1] - s[k]) > 0) k = 1;
    if (sign(s[2] - s[k]) > 0) k = 2;
    const PlanarPoint& p = t.v[k];
    const PlanarPoint& q = t.v[(k + 1) % 3];
    const PlanarPoint& opp = t.v[(k + 2) % 3];
    Rat half = make_rat(1, 2);
    PlanarPoint m{(p.x + q.x) * QuadVal(half, p.x.d), (p.y + q.y) * QuadVal(half, p.x.d)};
    return {PlanarTriangle{{{p, m, opp}}}, PlanarTriangle{{{m, q, opp}}}};
}

inline constexpr std::size_t kMeshCap = 1u << 16;

// Per-orbit-class counts after j rounds of planar refinement (2^j triangles).
inline std::vector<Int> simulate(const ShapePoint& z, int j, const OrbitRecord& orb,
                                 std::size_t cap = kMeshCap) {
    if (j < 0 || (std::size_t{1} << j) > cap) throw input_error("step count exceeds the mesh cap");
    std::map<ShapeKey, int> class_of;
    for (int i = 0; i < orb.size(); ++i) class_of.emplace(shape_key(orb.points[i]), i);
    std::vector<PlanarTriangle> mesh{seed_triangle(z)};
    for (int step = 0; step < j; ++step) {
        std::vector<PlanarTriangle> next;
        next.reserve(mesh.size() * 2);
        for (const PlanarTriangle& t : mesh) {
            auto [c1, c2] = bisect(t);
            next.push_back(c1);
            next.push_back(c2);
        }
        mesh.swap(next);
    }
    std::vector<Int> counts(orb.size(), 0);
    for (const PlanarTriangle& t : mesh) {
        auto it = class_of.find(shape_key(t));
        if (it == class_of.end()) throw unmatched_shape_key("at refinement step " + std::to_string(j));
        counts[it->second] += 1;
    }
    return counts;
}

inline std::vector<Int> simulate(const ShapePoint& z, int j, std::size_t cap = kMeshCap) {
    return simulate(z, j, compute_orbit(z), cap);
}

// Length-j {L,R} word expansion in shape space; independent of both the
// planar simulation and the matrix model.
inline std::vector<Int> tree_expand(const ShapePoint& z, int j, const OrbitRecord& orb) {
    std::vector<Int> counts(orb.size(), 0);
    counts[0] = 1;
    std::vector<Int> next(orb.size());
    for (int step = 0; step < j; ++step) {
        std::fill(next.begin(), next.end(), Int(0));
        for (int i = 0; i < orb.size(); ++i) {
            if (counts[i] == 0) continue;
            next[orb.left_succ[i]] += counts[i];
            next[orb.right_succ[i]] += counts[i];
        }
        counts.swap(next);
    }
    return counts;
}

inline std::vector<Int> tree_expand(const ShapePoint& z, int j) {
    return tree_expand(z, j, compute_orbit(z));
}

// Fraction of step-j area held by terminal classes (all step-j triangles have
// equal area, so counts are area).
inline Rat terminal_area_fraction(const ShapePoint& z, int j, const OrbitRecord& orb,
                                  std::size_t cap = kMeshCap) {
    std::vector<Int> counts = simulate(z, j, orb, cap);
    Int terminal = 0;
    for (int i = 0; i < orb.size(); ++i)
        if (is_terminal(orb.points[i])) terminal += counts[i];
    return make_rat(terminal, Int(1) << j);
}

// Smallest angle of a triangle, degrees, from exact squared sides.
inline double min_angle_deg(const PlanarTriangle& t) {
    auto s = t.sq_sides();
    double a2 = s[0].to_double(), b2 = s[1].to_double(), c2 = s[2].to_double();
    double a = std::sqrt(a2), b = std::sqrt(b2), c = std::sqrt(c2);
    // angle opposite each side via the law of cosines
    double A = std::acos(std::clamp((b2 + c2 - a2) / (2 * b * c), -1.0, 1.0));
    double B = std::acos(std::clamp((a2 + c2 - b2) / (2 * a * c), -1.0, 1.0));
    double C = std::acos(std::clamp((a2 + b2 - c2) / (2 * a * b), -1.0, 1.0));
    return std::min({A, B, C}) * 180.0 / M_PI;
}

inline double min_angle_deg(const ShapePoint& z) { return min_angle_deg(seed_triangle(z)); }

}  // namespace leb

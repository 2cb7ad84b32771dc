#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "leb/meshsim.hpp"
#include "leb/orbit.hpp"

namespace leb {

namespace svg_detail {

// Fixed 1000x1200 viewport over [0, 0.5] x [0, ~0.9]; purely presentational.
inline constexpr double kW = 1000.0, kH = 1200.0, kScale = 1250.0, kPad = 60.0;

inline double px(double x) { return kPad + x * kScale; }
inline double py(double y) { return kH - kPad - y * kScale; }

inline std::string fmt(double v) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << v;
    return s.str();
}

inline void circle_arc(std::ostringstream& out, double cx, double r, double deg_from, double deg_to,
                       const std::string& style) {
    // arc of circle centered (cx, 0), angles in degrees ccw from positive x
    double a0 = deg_from * M_PI / 180.0, a1 = deg_to * M_PI / 180.0;
    double x0 = cx + r * std::cos(a0), y0 = r * std::sin(a0);
    double x1 = cx + r * std::cos(a1), y1 = r * std::sin(a1);
    out << "<path d=\"M " << fmt(px(x0)) << " " << fmt(py(y0)) << " A " << fmt(r * kScale) << " "
        << fmt(r * kScale) << " 0 0 " << (deg_to > deg_from ? 0 : 1) << " " << fmt(px(x1)) << " "
        << fmt(py(y1)) << "\" fill=\"none\" " << style << "/>\n";
}

}  // namespace svg_detail

// The domain D with its six subregions, orbit points numbered in discovery
// order, and the Euclidean circle through each terminal quadruple (centers on
// Re = 1/2). Optionally overlays, per point, the circle tangent to the real
// axis at 0 (no claim is checked; the arcs are a visual aid only).
inline std::string orbit_svg(const OrbitRecord& orb, bool overlay_tangent_circles = false) {
    using namespace svg_detail;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
        << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::string dom = "stroke=\"#2e7d32\" stroke-width=\"2\"";
    // boundary of D: segments Re=0.. and the unit arc |z-1|=1
    out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(0.5))
        << "\" y2=\"" << fmt(py(0)) << "\" " << dom << "/>\n";
    out << "<line x1=\"" << fmt(px(0.5)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(0.5))
        << "\" y2=\"" << fmt(py(std::sqrt(3) / 2)) << "\" " << dom << "/>\n";
    circle_arc(out, 1.0, 1.0, 120, 180, dom);
    // subregion geodesics
    std::string geo = "stroke=\"#90a4ae\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";
    out << "<line x1=\"" << fmt(px(0.25)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(px(0.25))
        << "\" y2=\"" << fmt(py(std::sqrt(7) / 4)) << "\" " << geo << "/>\n";
    circle_arc(out, 0.0, 0.5, 90, 0, geo);
    circle_arc(out, 0.5, 0.5, 180, 75.5, geo);

    std::vector<TerminalQuadruple> cells = terminal_quadruples(orb);
    for (const auto& cell : cells) {
        // hyperbolic circle about zeta: Euclidean center (1/2, cosh(r)/2),
        // Euclidean radius sinh(r)/2
        double inv = zeta_radius_invariant(orb.points[cell.members.front()]).to_double();
        double ch = 1.0 + inv;
        double sh = std::sqrt(std::max(ch * ch - 1.0, 0.0));
        out << "<circle cx=\"" << fmt(px(0.5)) << "\" cy=\"" << fmt(py(ch / 2.0)) << "\" r=\""
            << fmt(sh / 2.0 * kScale)
            << "\" fill=\"rgba(255,193,7,0.15)\" stroke=\"#ffb300\" stroke-width=\"1\"/>\n";
    }

    if (overlay_tangent_circles) {
        for (const ShapePoint& p : orb.points) {
            double r = (p.re() * p.re() + p.im() * p.im()) / (2.0 * p.im());
            out << "<circle cx=\"" << fmt(px(0)) << "\" cy=\"" << fmt(py(r)) << "\" r=\"" << fmt(r * kScale)
                << "\" fill=\"none\" stroke=\"#b39ddb\" stroke-width=\"0.6\"/>\n";
        }
    }

    for (int i = 0; i < orb.size(); ++i) {
        const ShapePoint& p = orb.points[i];
        bool term = is_terminal(p);
        out << "<circle cx=\"" << fmt(px(p.re())) << "\" cy=\"" << fmt(py(p.im()))
            << "\" r=\"5\" fill=\"" << (term ? "#d32f2f" : "#1565c0") << "\"/>\n";
        out << "<text x=\"" << fmt(px(p.re()) + 7) << "\" y=\"" << fmt(py(p.im()) - 5)
            << "\" font-size=\"13\" font-family=\"sans-serif\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

// The planar mesh after j refinement rounds, terminal-class triangles shaded.
inline std::string mesh_svg(const ShapePoint& z, int j, const OrbitRecord& orb) {
    std::vector<PlanarTriangle> mesh{seed_triangle(z)};
    for (int step = 0; step < j; ++step) {
        std::vector<PlanarTriangle> next;
        next.reserve(mesh.size() * 2);
        for (const PlanarTriangle& t : mesh) {
            auto [a, b] = bisect(t);
            next.push_back(a);
            next.push_back(b);
        }
        mesh.swap(next);
    }
    std::map<ShapeKey, bool> terminal_key;
    for (const ShapePoint& p : orb.points) terminal_key.emplace(shape_key(p), is_terminal(p));

    double w = 1000, pad = 40, scale = w - 2 * pad;
    double h = z.im() * scale + 2 * pad;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    auto mx = [&](double x) { return pad + x * scale; };
    auto my = [&](double y) { return h - pad - y * scale; };
    for (const PlanarTriangle& t : mesh) {
        auto it = terminal_key.find(shape_key(t));
        bool term = it != terminal_key.end() && it->second;
        out << "<polygon points=\"";
        for (const PlanarPoint& p : t.v)
            out << svg_detail::fmt(mx(p.x.to_double())) << "," << svg_detail::fmt(my(p.y.to_double())) << " ";
        out << "\" fill=\"" << (term ? "rgba(211,47,47,0.35)" : "rgba(21,101,192,0.12)")
            << "\" stroke=\"#37474f\" stroke-width=\"0.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace leb

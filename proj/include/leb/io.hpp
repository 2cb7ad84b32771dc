#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "leb/graph.hpp"
#include "leb/meshsim.hpp"
#include "leb/orbit.hpp"
#include "leb/spectral.hpp"

namespace leb {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json point_json(const ShapePoint& z) {
    return {{"x", rat_str(z.x)}, {"s", rat_str(z.s)}, {"d", z.d}};
}

inline ShapePoint point_from_json(const json& j) {
    return ShapePoint(parse_rat(j.at("x").get<std::string>()), parse_rat(j.at("s").get<std::string>()),
                      j.at("d").get<long>());
}

inline json orbit_json(const ShapePoint& z, const OrbitRecord& orb) {
    std::vector<TerminalQuadruple> cells = terminal_quadruples(orb);
    json points = json::array();
    for (int i = 0; i < orb.size(); ++i) {
        const ShapePoint& p = orb.points[i];
        points.push_back({{"index", i},
                          {"x", rat_str(p.x)},
                          {"s", rat_str(p.s)},
                          {"region", region_name(orb.region[i])},
                          {"geodesic", geodesic_name(orb.genericity[i])},
                          {"terminal", is_terminal(p)}});
    }
    json quads = json::array();
    for (const auto& c : cells) quads.push_back(c.members);
    return {{"schema_version", kSchemaVersion},
            {"point", point_json(z)},
            {"l", orb.size()},
            {"q", static_cast<int>(cells.size())},
            {"points", points},
            {"left_succ", orb.left_succ},
            {"right_succ", orb.right_succ},
            {"quadruples", quads}};
}

inline json graph_json(const BisectionGraph& g) {
    json vertices = json::array();
    for (int v = 0; v < g.size(); ++v)
        vertices.push_back({{"id", v},
                            {"orbit_index", g.vertices[v].orbit_index},
                            {"tag", split_tag_name(g.vertices[v].tag)}});
    json edges = json::array();
    for (const GraphEdge& e : g.edges)
        edges.push_back({{"src", e.src}, {"dst", e.dst}, {"label", std::string(1, e.label)}});
    return {{"schema_version", kSchemaVersion},
            {"entry", g.entry},
            {"vertices", vertices},
            {"edges", edges},
            {"collapse", g.collapse}};
}

inline json spectral_json(const AdjMatrix& a, const BisectionGraph& g, int q) {
    auto eigs = spectrum(a);
    json spec = json::array();
    for (const auto& e : eigs) spec.push_back({{"re", e.real()}, {"im", e.imag()}});
    auto lim = limit_distributions(a, g.entry);
    json even = json::array(), odd = json::array();
    for (int i = 0; i < a.n; ++i) {
        even.push_back(lim.w_even(i));
        odd.push_back(lim.w_odd(i));
    }
    return {{"schema_version", kSchemaVersion},
            {"n", a.n},
            {"rho", spectral_radius(eigs)},
            {"eigenvalues", spec},
            {"dim_E2", exact_eigenspace_dim(a, 2)},
            {"dim_Eneg2", exact_eigenspace_dim(a, -2)},
            {"q", q},
            {"xi", convergence_rate(eigs)},
            {"w_even", even},
            {"w_odd", odd}};
}

// Atomic file write: stage to a sibling temp file, then rename.
inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot open output file " + tmp.string());
        out << content;
        if (!out.flush()) throw input_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace leb

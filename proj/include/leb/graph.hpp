#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leb/errors.hpp"
#include "leb/orbit.hpp"

namespace leb {

enum class SplitTag { plain, s1, s2, sL, sR };

inline const char* split_tag_name(SplitTag t) {
    switch (t) {
        case SplitTag::plain: return "plain";
        case SplitTag::s1: return "s1";
        case SplitTag::s2: return "s2";
        case SplitTag::sL: return "sL";
        case SplitTag::sR: return "sR";
    }
    return "?";
}

struct GraphVertex {
    int orbit_index;
    SplitTag tag;
};

struct GraphEdge {
    int src;
    int dst;
    char label;  // 'L' or 'R'
};

// The bisection graph: simple, directed, every vertex with exactly one
// outgoing L edge and one outgoing R edge. Non-generic orbit points are
// resolved into split vertices; collapse maps vertices back to orbit classes.
struct BisectionGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
    std::vector<int> collapse;  // vertex -> orbit index
    int entry = 0;              // vertex standing for z itself (e1)

    int size() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

enum class NodeKind { plain, single_loop, pair_lead, pair_follow, zeta_node, split_target };

}  // namespace detail

inline BisectionGraph build_graph(const OrbitRecord& orb) {
    using detail::NodeKind;
    int n = orb.size();
    std::vector<bool> on_upper(n), on_lower(n), on_re(n);
    for (int i = 0; i < n; ++i) {
        const ShapePoint& p = orb.points[i];
        Rat ss = p.s * p.s * p.d;
        on_upper[i] = (p.x * p.x + ss == make_rat(1, 2));
        on_lower[i] = ((p.x - 1) * (p.x - 1) + ss == make_rat(1, 2));
        on_re[i] = (p.x == make_rat(1, 2));
    }

    std::vector<NodeKind> kind(n, NodeKind::plain);
    std::vector<int> partner(n, -1);
    for (int i = 0; i < n; ++i) {
        if (on_upper[i] && on_lower[i]) {
            kind[i] = NodeKind::zeta_node;  // z == zeta, both loops on one point
        } else if (on_upper[i]) {
            // L(w) = w; partner w' = R(w) carries the R loop
            int j = orb.right_succ[i];
            if (!on_lower[j] || orb.left_succ[j] != i || orb.left_succ[i] != i)
                throw unresolved_non_generic("loop pair broken at " + point_str(orb.points[i]));
            kind[i] = NodeKind::pair_lead;
            partner[i] = j;
            kind[j] = NodeKind::pair_follow;
            partner[j] = i;
        } else if (on_lower[i] && kind[i] == NodeKind::plain) {
            int p = orb.left_succ[i];
            if (on_upper[p] && orb.right_succ[p] == i) continue;  // claimed by its lead
            if (orb.right_succ[i] != i)
                throw unresolved_non_generic("expected R loop at " + point_str(orb.points[i]));
            kind[i] = NodeKind::single_loop;
        }
    }
    // children of Re=1/2 points receive the label-directed split
    for (int i = 0; i < n; ++i) {
        if (!on_re[i]) continue;
        if (orb.left_succ[i] != orb.right_succ[i])
            throw unresolved_non_generic("L(w) != R(w) on Re=1/2 at " + point_str(orb.points[i]));
        int c = orb.left_succ[i];
        if (kind[c] == NodeKind::split_target || kind[c] == NodeKind::zeta_node) continue;
        if (kind[c] != NodeKind::plain)
            throw unresolved_non_generic("split target is itself loop-resolved at " + point_str(orb.points[c]));
        kind[c] = NodeKind::split_target;
    }

    BisectionGraph g;
    std::vector<int> base(n, -1);  // first vertex id of each orbit index
    auto emit = [&](int i, SplitTag t) {
        g.vertices.push_back({i, t});
        g.collapse.push_back(i);
    };
    for (int i = 0; i < n; ++i) {
        base[i] = g.size();
        switch (kind[i]) {
            case NodeKind::plain: emit(i, SplitTag::plain); break;
            case NodeKind::single_loop:
            case NodeKind::pair_lead:
            case NodeKind::pair_follow:
                emit(i, SplitTag::s1);
                emit(i, SplitTag::s2);
                break;
            case NodeKind::zeta_node:
                // degenerate pair-of-loops: (s1,s2) is the L-loop pair,
                // (sL,sR) the R-loop pair
                emit(i, SplitTag::s1);
                emit(i, SplitTag::s2);
                emit(i, SplitTag::sL);
                emit(i, SplitTag::sR);
                break;
            case NodeKind::split_target:
                emit(i, SplitTag::sL);
                emit(i, SplitTag::sR);
                break;
        }
    }

    // where an edge labeled `label` into orbit point t lands
    auto target = [&](int t, char label) -> int {
        switch (kind[t]) {
            case NodeKind::plain: return base[t];
            case NodeKind::single_loop:
            case NodeKind::pair_lead:
            case NodeKind::pair_follow: return base[t];  // w1
            case NodeKind::zeta_node: return label == 'L' ? base[t] : base[t] + 2;
            case NodeKind::split_target: return label == 'L' ? base[t] : base[t] + 1;
        }
        return base[t];
    };

    auto add = [&](int src, int dst, char label) { g.edges.push_back({src, dst, label}); };
    for (int i = 0; i < n; ++i) {
        int b = base[i];
        int lt = orb.left_succ[i], rt = orb.right_succ[i];
        switch (kind[i]) {
            case NodeKind::plain:
                add(b, target(lt, 'L'), 'L');
                add(b, target(rt, 'R'), 'R');
                break;
            case NodeKind::split_target:
                for (int v : {b, b + 1}) {
                    add(v, target(lt, 'L'), 'L');
                    add(v, target(rt, 'R'), 'R');
                }
                break;
            case NodeKind::single_loop:
                // R loop -> 2-cycle; both copies keep the L edge
                add(b, b + 1, 'R');
                add(b + 1, b, 'R');
                add(b, target(lt, 'L'), 'L');
                add(b + 1, target(lt, 'L'), 'L');
                break;
            case NodeKind::pair_lead: {
                int pb = base[partner[i]];
                add(b, b + 1, 'L');
                add(b + 1, b, 'L');
                add(pb, pb + 1, 'R');
                add(pb + 1, pb, 'R');
                add(b, pb, 'R');
                add(b + 1, pb + 1, 'R');
                add(pb, b, 'L');
                add(pb + 1, b + 1, 'L');
                break;
            }
            case NodeKind::pair_follow:
                break;  // emitted by the lead
            case NodeKind::zeta_node:
                add(b, b + 1, 'L');
                add(b + 1, b, 'L');
                add(b + 2, b + 3, 'R');
                add(b + 3, b + 2, 'R');
                add(b, b + 2, 'R');
                add(b + 1, b + 3, 'R');
                add(b + 2, b, 'L');
                add(b + 3, b + 1, 'L');
                break;
        }
    }

    g.entry = base[0];  // w1 / sL / plain copy of z, by convention

    // structural invariants; violations indicate an unhandled pattern
    std::set<std::pair<int, int>> seen;
    std::vector<int> out_l(g.size(), 0), out_r(g.size(), 0);
    for (const GraphEdge& e : g.edges) {
        if (e.src == e.dst) throw unresolved_non_generic("loop survived resolution");
        if (!seen.insert({e.src, e.dst}).second) throw unresolved_non_generic("parallel edge survived resolution");
        (e.label == 'L' ? out_l : out_r)[e.src]++;
    }
    for (int v = 0; v < g.size(); ++v)
        if (out_l[v] != 1 || out_r[v] != 1)
            throw unresolved_non_generic("vertex without exactly one L and one R out-edge");
    return g;
}

// Adjacency matrix in the paper's transpose convention: A[i][j] = 1 iff edge
// (j -> i); all column sums equal 2.
struct AdjMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major

    int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

inline AdjMatrix adjacency_matrix(const BisectionGraph& g) {
    AdjMatrix a;
    a.n = g.size();
    a.entries.assign(static_cast<std::size_t>(a.n) * a.n, 0);
    for (const GraphEdge& e : g.edges) a.at(e.dst, e.src) = 1;
    return a;
}

// Tarjan, iterative; components reported in a deterministic order (sorted by
// smallest vertex id).
inline std::vector<std::vector<int>> scc(const BisectionGraph& g) {
    int n = g.size();
    std::vector<std::vector<int>> adj(n);
    for (const GraphEdge& e : g.edges) adj[e.src].push_back(e.dst);
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;
    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (idx[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (idx[w] == -1) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], idx[w]);
                }
            } else {
                if (low[f.v] == idx[f.v]) {
                    std::vector<int> c;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        c.push_back(w);
                    } while (w != f.v);
                    std::sort(c.begin(), c.end());
                    comps.push_back(std::move(c));
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

// GraphViz rendering; L edges solid, R edges dashed, terminal quadruples
// clustered.
inline std::string to_dot(const BisectionGraph& g, const OrbitRecord& orb) {
    std::vector<TerminalQuadruple> cells = terminal_quadruples(orb);
    std::vector<int> cell_of_orbit(orb.size(), -1);
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int m : cells[c].members) cell_of_orbit[m] = static_cast<int>(c);

    std::ostringstream out;
    out << "digraph leb {\n  rankdir=LR;\n  node [shape=circle fontsize=10];\n";
    std::vector<bool> emitted(g.size(), false);
    auto vertex_line = [&](int v) {
        const GraphVertex& gv = g.vertices[v];
        out << "    v" << v << " [label=\"" << gv.orbit_index;
        if (gv.tag != SplitTag::plain) out << ":" << split_tag_name(gv.tag);
        out << "\"];\n";
    };
    for (std::size_t c = 0; c < cells.size(); ++c) {
        out << "  subgraph cluster_q" << c << " {\n    label=\"quadruple " << c << "\";\n";
        for (int v = 0; v < g.size(); ++v) {
            if (cell_of_orbit[g.collapse[v]] == static_cast<int>(c)) {
                vertex_line(v);
                emitted[v] = true;
            }
        }
        out << "  }\n";
    }
    for (int v = 0; v < g.size(); ++v)
        if (!emitted[v]) vertex_line(v);
    for (const GraphEdge& e : g.edges)
        out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label << "\""
            << (e.label == 'R' ? " style=dashed" : "") << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace leb

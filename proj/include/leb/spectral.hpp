#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <vector>

#include "leb/errors.hpp"
#include "leb/graph.hpp"
#include "leb/rational.hpp"

namespace leb {

// Exact A^j e1 (entries sum to 2^j since column sums are 2).
struct CountVector {
    std::vector<Int> counts;
    int step = 0;
};

inline CountVector counts_at_step(const AdjMatrix& a, int j, int entry = 0) {
    CountVector v;
    v.step = j;
    v.counts.assign(a.n, 0);
    v.counts[entry] = 1;
    std::vector<Int> next(a.n);
    for (int s = 0; s < j; ++s) {
        for (int i = 0; i < a.n; ++i) {
            next[i] = 0;
            for (int k = 0; k < a.n; ++k)
                if (a.at(i, k) != 0) next[i] += v.counts[k];
        }
        v.counts.swap(next);
    }
    return v;
}

// Sum split vertices back to orbit classes.
inline std::vector<Int> collapse_counts(const CountVector& v, const BisectionGraph& g, int orbit_size) {
    std::vector<Int> out(orbit_size, 0);
    for (int i = 0; i < static_cast<int>(v.counts.size()); ++i) out[g.collapse[i]] += v.counts[i];
    return out;
}

namespace detail {

// Fraction-free (Bareiss) elimination over Z; returns the rank.
inline int bareiss_rank(std::vector<std::vector<Int>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace detail

// dim N(A - lambda I) for integer lambda, certificate-grade (exact integer
// elimination).
inline int exact_eigenspace_dim(const AdjMatrix& a, int lambda) {
    std::vector<std::vector<Int>> m(a.n, std::vector<Int>(a.n));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) m[i][j] = a.at(i, j) - (i == j ? lambda : 0);
    return a.n - detail::bareiss_rank(std::move(m));
}

inline constexpr int kDenseLimit = 2000;

inline Eigen::MatrixXd to_dense(const AdjMatrix& a) {
    Eigen::MatrixXd m(a.n, a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) m(i, j) = a.at(i, j);
    return m;
}

inline std::vector<std::complex<double>> spectrum(const AdjMatrix& a) {
    if (a.n > kDenseLimit) throw input_error("matrix exceeds the dense eigensolver limit");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_dense(a), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw convergence_failure();
    std::vector<std::complex<double>> eigs(a.n);
    for (int i = 0; i < a.n; ++i) eigs[i] = solver.eigenvalues()(i);
    std::sort(eigs.begin(), eigs.end(), [](const auto& u, const auto& v) {
        if (std::abs(u) != std::abs(v)) return std::abs(u) > std::abs(v);
        if (u.real() != v.real()) return u.real() > v.real();
        return u.imag() > v.imag();
    });
    return eigs;
}

inline double spectral_radius(const std::vector<std::complex<double>>& eigs) {
    double rho = 0;
    for (const auto& e : eigs) rho = std::max(rho, std::abs(e));
    return rho;
}

struct LimitDistributions {
    Eigen::VectorXd w_even;
    Eigen::VectorXd w_odd;
    int iterations = 0;
};

inline constexpr double kIterTol = 1e-13;
inline constexpr int kIterCap = 100'000;

// Period-2 limits of (A/2)^j e1; convergence is geometric, the cap guards bugs.
inline LimitDistributions limit_distributions(const AdjMatrix& a, int entry = 0) {
    Eigen::MatrixXd half = to_dense(a) / 2.0;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(a.n);
    v(entry) = 1.0;
    LimitDistributions out;
    for (int it = 0; it < kIterCap; ++it) {
        Eigen::VectorXd next = half * (half * v);
        double change = (next - v).lpNorm<Eigen::Infinity>();
        v = next;
        if (change < kIterTol) {
            out.w_even = v;
            out.w_odd = half * v;
            out.iterations = 2 * (it + 1);
            return out;
        }
    }
    throw iteration_limit();
}

// sqrt(|lambda2|)/2 + 1e-6 with lambda2 the largest eigenvalue of A^2 below 4,
// i.e. (second-largest |lambda| of A)^2. Always in (0, 1).
inline double convergence_rate(const std::vector<std::complex<double>>& eigs) {
    double second = 0.0;
    for (const auto& e : eigs) {
        double m = std::abs(e);
        if (std::abs(m - 2.0) <= 1e-6) continue;  // the +-2 Perron pair
        second = std::max(second, m);
    }
    return second / 2.0 + 1e-6;
}

struct ConjectureFlags {
    bool spectrum_in_set = false;
    bool bipartite = false;
    bool diagonalizable = false;
};

// Report-only diagnostics for the open problems; never asserted anywhere.
inline ConjectureFlags conjecture_report(const AdjMatrix& a, const BisectionGraph& g) {
    ConjectureFlags flags;

    auto eigs = spectrum(a);
    const double set[] = {2.0, -2.0, std::sqrt(2.0), -std::sqrt(2.0), 1.0, -1.0, 0.0};
    flags.spectrum_in_set = std::all_of(eigs.begin(), eigs.end(), [&](const std::complex<double>& e) {
        for (double s : set)
            if (std::abs(e - std::complex<double>(s, 0)) <= 1e-6) return true;
        return false;
    });

    // 2-colorability of the underlying undirected graph
    std::vector<std::vector<int>> adj(g.size());
    for (const GraphEdge& e : g.edges) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::vector<int> color(g.size(), -1);
    flags.bipartite = true;
    for (int r = 0; r < g.size() && flags.bipartite; ++r) {
        if (color[r] != -1) continue;
        color[r] = 0;
        std::queue<int> bfs;
        bfs.push(r);
        while (!bfs.empty() && flags.bipartite) {
            int v = bfs.front();
            bfs.pop();
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    bfs.push(w);
                } else if (color[w] == color[v]) {
                    flags.bipartite = false;
                    break;
                }
            }
        }
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_dense(a), /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw convergence_failure();
    Eigen::MatrixXcd vecs = solver.eigenvectors();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vecs);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    double cond = smin > 0 ? svd.singularValues()(0) / smin : std::numeric_limits<double>::infinity();
    flags.diagonalizable = cond < 1e8;
    return flags;
}

}  // namespace leb

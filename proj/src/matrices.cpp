#include "hsw/matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace hsw {

SquareMatrix laplacian_matrix(const Graph& g) {
    SquareMatrix L(g.n);
    for (int i = 0; i < g.n; ++i) L(i, i) = g.degree(i);
    for (auto [u, v] : g.edges) {
        L(u, v) = -1.0;
        L(v, u) = -1.0;
    }
    return L;
}

MatrixSet build_matrices(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("build_matrices needs a connected graph");

    MatrixSet ms;
    ms.adjacency = SquareMatrix(g.n);
    ms.degree = SquareMatrix(g.n);
    ms.transition = SquareMatrix(g.n);
    for (auto [u, v] : g.edges) {
        ms.adjacency(u, v) = 1.0;
        ms.adjacency(v, u) = 1.0;
    }
    for (int i = 0; i < g.n; ++i) {
        ms.degree(i, i) = g.degree(i);
        for (int j : g.adj[i]) ms.transition(i, j) = 1.0 / g.degree(i);
    }
    ms.laplacian = laplacian_matrix(g);
    return ms;
}

SquareMatrix normalized_adjacency(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("normalized_adjacency needs a connected graph");
    std::vector<double> inv_sqrt_d(g.n);
    for (int i = 0; i < g.n; ++i) inv_sqrt_d[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
    SquareMatrix s(g.n);
    for (auto [u, v] : g.edges) {
        double w = inv_sqrt_d[u] * inv_sqrt_d[v];
        s(u, v) = w;
        s(v, u) = w;
    }
    return s;
}

} // namespace hsw

#ifndef HSW_MATRICES_HPP
#define HSW_MATRICES_HPP

#include <vector>

#include "hsw/graph.hpp"

namespace hsw {

// Dense square matrix, row-major. Intended for desk-scale graphs where
// the O(n^2) footprint is fine.
struct SquareMatrix {
    int n = 0;
    std::vector<double> a;

    SquareMatrix() = default;
    explicit SquareMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

struct MatrixSet {
    SquareMatrix adjacency;  // A, 0/1 entries
    SquareMatrix degree;     // D, diagonal
    SquareMatrix laplacian;  // L = D - A
    SquareMatrix transition; // P, a_ij / d(v_i)
};

// Requires a connected graph (every vertex has degree >= 1 so P is defined).
MatrixSet build_matrices(const Graph& g);

// Normalized adjacency D^{-1/2} A D^{-1/2}; similar to P, so its
// (real) spectrum equals the transition spectrum.
SquareMatrix normalized_adjacency(const Graph& g);

SquareMatrix laplacian_matrix(const Graph& g);

} // namespace hsw

#endif

#ifndef HSW_HSW_HPP
#define HSW_HSW_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hsw/graph.hpp"

namespace hsw {

inline constexpr long long kDefaultVertexBudget = 1'000'000;

// Hierarchical network over a full r-ary basic tree of height g: every
// non-leaf tree vertex is linked to all of its descendants. Vertices are
// indexed in level order, so the children of tree node j are
// r*j+1 ... r*j+r and level i occupies [ (r^i-1)/(r-1), (r^{i+1}-1)/(r-1) ).
struct HierarchicalNetwork {
    Graph graph;
    int r = 2;
    int g = 0;
    std::vector<int> level;            // l_g(v), equals |anc(v)|
    std::vector<int> parent;           // -1 for the root
    std::vector<long long> desc_count; // D_v = |des(v)|
    std::vector<long long> level_start; // size g+2, level i is [start[i], start[i+1])

    long long n() const { return graph.n; }
    bool is_leaf(int v) const { return level[v] == g; }
    long long anc_count(int v) const { return level[v]; }
};

struct OrderSize {
    long long vertices = 0;
    long long edges = 0;
};

// Exact closed forms for N_g and E_g. Both printed expressions for E_g
// (the product form and the N_g-based form) are evaluated and must agree.
// Throws std::overflow_error instead of wrapping.
OrderSize order_and_size(int r, int g);

// Basic-tree construction. Throws when r < 2, g < 0, or N_g exceeds the
// vertex budget.
HierarchicalNetwork build_hsw(int r, int g, long long vertex_budget = kDefaultVertexBudget);

// Recursive-modular construction (r copies of the previous generation plus
// a new root joined to everything), relabeled onto the canonical level-order
// indices. Returns the edge set for comparison against build_hsw.
std::vector<std::pair<int, int>> recursive_modular_edges(int r, int g);

// Degree shared by every level-i vertex: (r^{g+1-i}-1)/(r-1) + i - 1.
long long level_degree(int r, int g, int i);

struct LevelProfile {
    int r = 2;
    int g = 0;
    std::vector<long long> level_count;           // r^i vertices in level i
    std::vector<long long> level_degree;          // k_i
    std::vector<double> level_probability;        // P(i) = r^i (r-1) / (r^{g+1}-1)
    std::vector<std::pair<long long, long long>> degree_histogram; // (degree, count), ascending
};

LevelProfile level_profile(const HierarchicalNetwork& net);

// JSON descriptor {r, g, n, m, levels:[{level, count, degree, p}...]}.
void write_network_json(const HierarchicalNetwork& net, std::ostream& out);

} // namespace hsw

#endif

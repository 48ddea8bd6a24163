#ifndef HSW_GRAPH_HPP
#define HSW_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hsw {

// Undirected simple graph. Vertices are 0-based. The edge list keeps
// u < v and is sorted lexicographically; neighbor lists are sorted and
// symmetric by construction.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    bool is_complete() const {
        return static_cast<long long>(m()) * 2 == static_cast<long long>(n) * (n - 1);
    }
};

// Validates (no self-loops, no duplicates, indices in range) and builds
// the neighbor lists. Throws std::invalid_argument on violations.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

bool is_connected(const Graph& g);

enum class Family { path, cycle, star, complete };

// "path" | "cycle" | "star" | "complete"; throws on anything else.
Family family_from_string(const std::string& name);
std::string family_name(Family f);

// Baseline families used in the comparison tables. Star puts the center
// at index 0. Path/star/complete need n >= 2, cycle needs n >= 3.
Graph build_baseline(Family family, int n);

// Edge-list text format: header line "# n=<n> m=<m>", then one "u v"
// per line with u < v, sorted lexicographically.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

} // namespace hsw

#endif

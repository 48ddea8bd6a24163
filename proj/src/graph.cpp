#include "hsw/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hsw {

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge rejected");

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.n;
}

Family family_from_string(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete") return Family::complete;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
    }
    throw std::logic_error("unreachable");
}

Graph build_baseline(Family family, int n) {
    int min_n = family == Family::cycle ? 3 : 2;
    if (n < min_n)
        throw std::invalid_argument(family_name(family) + " needs n >= " + std::to_string(min_n));

    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case Family::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case Family::cycle:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            break;
        case Family::star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case Family::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
    }
    return make_graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n=" << g.n << " m=" << g.m() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

Graph read_edge_list(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty edge-list input");
    int n = -1, m = -1;
    if (std::sscanf(header.c_str(), "# n=%d m=%d", &n, &m) != 2)
        throw std::invalid_argument("bad edge-list header: " + header);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m >= 0 ? m : 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge count does not match header");
    return make_graph(n, std::move(edges));
}

} // namespace hsw

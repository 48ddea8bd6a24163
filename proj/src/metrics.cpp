#include "hsw/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace hsw {
namespace {

// Sum of BFS distances from src to all vertices with index > src, so every
// unordered pair is counted exactly once across sources. Returns -1 if some
// vertex is unreachable.
long long bfs_pair_distance_sum(const Graph& g, int src, std::vector<int>& dist) {
    dist.assign(g.n, -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != g.n) return -1;
    long long sum = 0;
    for (int v = src + 1; v < g.n; ++v) sum += dist[v];
    return sum;
}

double pair_sum_to_mean(const Graph& g, long long total) {
    double pairs = 0.5 * static_cast<double>(g.n) * (g.n - 1);
    return static_cast<double>(total) / pairs;
}

// Dinic with unit-ish integer capacities.
struct MaxFlow {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit MaxFlow(int nodes) : arcs(nodes), level(nodes), iter(nodes) {}

    void add_edge(int from, int to, int cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int run(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            int f;
            while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
        }
        return flow;
    }
};

int st_edge_flow(const Graph& g, int s, int t, int limit) {
    MaxFlow mf(g.n);
    for (auto [u, v] : g.edges) {
        mf.add_edge(u, v, 1);
        mf.add_edge(v, u, 1);
    }
    return mf.run(s, t, limit);
}

// Internally vertex-disjoint paths between non-adjacent s, t: split every
// vertex except s and t into in/out halves with capacity 1.
int st_vertex_flow(const Graph& g, int s, int t, int limit) {
    const int inf = std::numeric_limits<int>::max() / 2;
    auto in_node = [](int v) { return 2 * v; };
    auto out_node = [](int v) { return 2 * v + 1; };
    MaxFlow mf(2 * g.n);
    for (int v = 0; v < g.n; ++v) mf.add_edge(in_node(v), out_node(v), v == s || v == t ? inf : 1);
    for (auto [u, v] : g.edges) {
        mf.add_edge(out_node(u), in_node(v), inf);
        mf.add_edge(out_node(v), in_node(u), inf);
    }
    return mf.run(out_node(s), in_node(t), limit);
}

} // namespace

double avg_path_length_serial(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("avg_path_length needs n >= 2");
    long long total = 0;
    std::vector<int> dist;
    for (int src = 0; src < g.n; ++src) {
        long long s = bfs_pair_distance_sum(g, src, dist);
        if (s < 0) throw std::invalid_argument("avg_path_length on disconnected graph");
        total += s;
    }
    return pair_sum_to_mean(g, total);
}

double avg_path_length(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("avg_path_length needs n >= 2");
    long long total = 0;
    bool disconnected = false;
    // Integer partial sums reduce identically no matter how sources are
    // scheduled across threads.
#pragma omp parallel reduction(+ : total)
    {
        std::vector<int> dist;
#pragma omp for schedule(dynamic, 16)
        for (int src = 0; src < g.n; ++src) {
            long long s = bfs_pair_distance_sum(g, src, dist);
            if (s < 0) {
#pragma omp atomic write
                disconnected = true;
            } else {
                total += s;
            }
        }
    }
    if (disconnected) throw std::invalid_argument("avg_path_length on disconnected graph");
    return pair_sum_to_mean(g, total);
}

int edge_connectivity(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("edge_connectivity needs n >= 2");
    if (!is_connected(g)) return 0;
    int best = g.n; // any s-t cut is at most n-1 edges here (simple graph)
    for (int t = 1; t < g.n; ++t) best = std::min(best, st_edge_flow(g, 0, t, best));
    return best;
}

int vertex_connectivity(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("vertex_connectivity needs n >= 2");
    if (!is_connected(g)) return 0;
    if (g.is_complete()) return g.n - 1;
    // Even-Tarjan style scan: a minimum cut of size k misses at least one of
    // the first k+1 vertices, so scanning sources 0..best is enough.
    int best = g.n - 2;
    for (int s = 0; s <= best && s < g.n; ++s) {
        for (int t = 0; t < g.n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            best = std::min(best, st_vertex_flow(g, s, t, best));
        }
    }
    return best;
}

GraphMetrics compute_metrics(const Graph& g, int connectivity_limit) {
    if (!is_connected(g)) throw std::invalid_argument("compute_metrics needs a connected graph");

    GraphMetrics mt;
    mt.max_degree = 0;
    mt.min_degree = g.n;
    for (int v = 0; v < g.n; ++v) {
        mt.max_degree = std::max(mt.max_degree, g.degree(v));
        mt.min_degree = std::min(mt.min_degree, g.degree(v));
    }
    mt.avg_degree = 2.0 * g.m() / g.n;
    mt.density = g.n > 1 ? 2.0 * g.m() / (static_cast<double>(g.n) * (g.n - 1)) : 0.0;
    mt.avg_path_length = g.n > 1 ? avg_path_length(g) : 0.0;
    if (g.n <= connectivity_limit) {
        mt.vertex_connectivity = vertex_connectivity(g);
        mt.edge_connectivity = edge_connectivity(g);
    }
    return mt;
}

} // namespace hsw

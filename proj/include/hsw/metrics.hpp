#ifndef HSW_METRICS_HPP
#define HSW_METRICS_HPP

#include <optional>

#include "hsw/graph.hpp"

namespace hsw {

// Exact max-flow connectivity is only attempted up to this many vertices;
// beyond it the fields come back empty ("skipped").
inline constexpr int kConnectivityLimit = 2000;

struct GraphMetrics {
    int max_degree = 0;
    int min_degree = 0;
    double avg_degree = 0.0;      // 2m/n
    double density = 0.0;         // 2m/(n(n-1))
    double avg_path_length = 0.0; // mean over unordered distinct pairs
    std::optional<int> vertex_connectivity;
    std::optional<int> edge_connectivity;
};

// Throws std::invalid_argument on disconnected input.
GraphMetrics compute_metrics(const Graph& g, int connectivity_limit = kConnectivityLimit);

// Mean shortest-path length over unordered distinct pairs, BFS from every
// source. The default runs sources in parallel; the serial version is the
// reference the tests compare against.
double avg_path_length(const Graph& g);
double avg_path_length_serial(const Graph& g);

// Exact connectivities via unit-capacity max-flow (Dinic). Vertex
// connectivity of a complete graph is n-1 by convention.
int edge_connectivity(const Graph& g);
int vertex_connectivity(const Graph& g);

} // namespace hsw

#endif

#include "hsw/hsw.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include "hsw/format.hpp"

namespace hsw {
namespace {

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
    return out;
}

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
    return out;
}

long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
    return out;
}

long long checked_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

void check_params(int r, int g) {
    if (r < 2) throw std::invalid_argument("branching factor r must be >= 2");
    if (g < 0) throw std::invalid_argument("generation g must be >= 0");
}

} // namespace

OrderSize order_and_size(int r, int g) {
    check_params(r, g);
    long long n = (checked_pow(r, g + 1) - 1) / (r - 1);

    // Product form: (g r^{g+2} - g r^{g+1} - r^{g+1} + r) / (r-1)^2.
    long long rg1 = checked_pow(r, g + 1);
    long long num = checked_mul(static_cast<long long>(g), checked_mul(rg1, r));
    num = checked_sub(num, checked_mul(static_cast<long long>(g), rg1));
    num = checked_sub(num, rg1);
    num = checked_add(num, r);
    long long denom = static_cast<long long>(r - 1) * (r - 1);
    if (num % denom != 0) throw std::logic_error("E_g product form not divisible");
    long long e_product = num / denom;

    // N_g-based form: (g+1)/(r-1) + (g - 1/(r-1)) N_g, cleared of fractions:
    // ((g+1) + (g(r-1) - 1) N_g) / (r-1).
    long long num2 = checked_sub(checked_mul(static_cast<long long>(g), r - 1), 1);
    num2 = checked_add(g + 1, checked_mul(num2, n));
    if (num2 % (r - 1) != 0) throw std::logic_error("E_g N-based form not divisible");
    long long e_nbased = num2 / (r - 1);

    if (e_product != e_nbased) throw std::logic_error("E_g closed forms disagree");
    return {n, e_product};
}

HierarchicalNetwork build_hsw(int r, int g, long long vertex_budget) {
    check_params(r, g);
    OrderSize os = order_and_size(r, g);
    if (os.vertices > vertex_budget)
        throw std::invalid_argument("N_g = " + std::to_string(os.vertices) +
                                    " exceeds vertex budget " + std::to_string(vertex_budget));

    HierarchicalNetwork net;
    net.r = r;
    net.g = g;
    const int n = static_cast<int>(os.vertices);

    net.level_start.assign(g + 2, 0);
    for (int i = 0; i <= g + 1; ++i) net.level_start[i] = (checked_pow(r, i) - 1) / (r - 1);

    net.level.resize(n);
    net.parent.resize(n);
    net.desc_count.resize(n);
    for (int i = 0; i <= g; ++i) {
        long long subtree = (checked_pow(r, g - i + 1) - 1) / (r - 1);
        for (long long v = net.level_start[i]; v < net.level_start[i + 1]; ++v) {
            net.level[v] = i;
            net.parent[v] = v == 0 ? -1 : static_cast<int>((v - 1) / r);
            net.desc_count[v] = subtree - 1;
        }
    }

    // Every non-leaf vertex joined to all its descendants; the descendants
    // of a level-i vertex occupy one contiguous position range per level.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(os.edges));
    for (int v = 0; v < n; ++v) {
        int lv = net.level[v];
        if (lv == g) continue;
        long long lo = v - net.level_start[lv];
        long long hi = lo;
        for (int l = lv + 1; l <= g; ++l) {
            lo *= r;
            hi = hi * r + (r - 1);
            for (long long p = lo; p <= hi; ++p)
                edges.emplace_back(v, static_cast<int>(net.level_start[l] + p));
        }
    }
    net.graph = make_graph(n, std::move(edges));
    if (static_cast<long long>(net.graph.m()) != os.edges)
        throw std::logic_error("constructed edge count disagrees with E_g");
    return net;
}

std::vector<std::pair<int, int>> recursive_modular_edges(int r, int g) {
    check_params(r, g);
    if (g == 0) return {};

    // Edges of M_{g-1} in that network's own level-order indexing.
    std::vector<std::pair<int, int>> prev = recursive_modular_edges(r, g - 1);

    // Relabel local index j of copy c: level goes up by one, the position
    // within the level shifts by c * r^level.
    std::vector<long long> prev_start(g + 1, 0);
    for (int i = 0; i <= g; ++i) prev_start[i] = (checked_pow(r, i) - 1) / (r - 1);
    auto level_of_prev = [&](int j) {
        int l = 0;
        while (j >= prev_start[l + 1]) ++l;
        return l;
    };
    auto relabel = [&](int j, int copy, const std::vector<long long>& cur_start) {
        int l = level_of_prev(j);
        long long pos = j - prev_start[l] + static_cast<long long>(copy) * checked_pow(r, l);
        return static_cast<int>(cur_start[l + 1] + pos);
    };

    std::vector<long long> cur_start(g + 2, 0);
    for (int i = 0; i <= g + 1; ++i) cur_start[i] = (checked_pow(r, i) - 1) / (r - 1);
    long long n = cur_start[g + 1];

    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < r; ++copy)
        for (auto [u, v] : prev)
            edges.emplace_back(relabel(u, copy, cur_start), relabel(v, copy, cur_start));
    // New root vertex 0 linked to every vertex of every copy.
    for (long long v = 1; v < n; ++v) edges.emplace_back(0, static_cast<int>(v));
    return edges;
}

long long level_degree(int r, int g, int i) {
    check_params(r, g);
    if (i < 0 || i > g) throw std::invalid_argument("level out of range");
    return (checked_pow(r, g + 1 - i) - 1) / (r - 1) + i - 1;
}

LevelProfile level_profile(const HierarchicalNetwork& net) {
    LevelProfile lp;
    lp.r = net.r;
    lp.g = net.g;
    double n_g = static_cast<double>(net.n());
    for (int i = 0; i <= net.g; ++i) {
        long long count = net.level_start[i + 1] - net.level_start[i];
        lp.level_count.push_back(count);
        lp.level_degree.push_back(net.g == 0 ? 0 : level_degree(net.r, net.g, i));
        lp.level_probability.push_back(static_cast<double>(count) / n_g);
    }
    std::map<long long, long long> hist;
    for (int v = 0; v < net.graph.n; ++v) ++hist[net.graph.degree(v)];
    lp.degree_histogram.assign(hist.begin(), hist.end());
    return lp;
}

void write_network_json(const HierarchicalNetwork& net, std::ostream& out) {
    LevelProfile lp = level_profile(net);
    out << "{\"r\": " << net.r << ", \"g\": " << net.g << ", \"n\": " << net.n()
        << ", \"m\": " << net.graph.m() << ", \"levels\": [";
    for (int i = 0; i <= net.g; ++i) {
        if (i) out << ", ";
        out << "{\"level\": " << i << ", \"count\": " << lp.level_count[i]
            << ", \"degree\": " << lp.level_degree[i]
            << ", \"p\": " << fmt17(lp.level_probability[i]) << "}";
    }
    out << "]}\n";
}

} // namespace hsw

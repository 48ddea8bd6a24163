#include "hsw/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "hsw/format.hpp"
#include "hsw/jacobi.hpp"
#include "hsw/matrices.hpp"

namespace hsw {

long long SpectrumResult::multiplicity_sum() const {
    long long total = 0;
    for (auto& [lambda, mult] : pairs) total += mult;
    return total;
}

double SpectrumResult::trace() const {
    double total = 0.0;
    for (auto& [lambda, mult] : pairs) total += lambda * static_cast<double>(mult);
    return total;
}

SpectrumResult closed_form_spectrum(int r, int g) {
    if (r < 2) throw std::invalid_argument("branching factor r must be >= 2");
    if (g < 1) throw std::invalid_argument("closed_form_spectrum needs g >= 1 (M_0 has spectrum {0})");

    // Integer keys keep the merge exact; both families happen to be
    // integer-valued.
    std::map<long long, long long> merged;
    merged[0] = 1;
    long long r_pow_i = 1; // r^i
    for (int i = 0; i < g; ++i) {
        long long tree_eigenvalue = i + 1;
        long long big_eigenvalue = 0;
        {
            long long p = 1;
            for (int k = 0; k < g - i + 1; ++k) {
                if (__builtin_mul_overflow(p, static_cast<long long>(r), &p))
                    throw std::overflow_error("closed_form_spectrum overflow");
            }
            big_eigenvalue = (p - 1) / (r - 1) + i;
        }
        merged[tree_eigenvalue] += (r - 1) * r_pow_i;
        merged[big_eigenvalue] += r_pow_i;
        if (__builtin_mul_overflow(r_pow_i, static_cast<long long>(r), &r_pow_i))
            throw std::overflow_error("closed_form_spectrum overflow");
    }

    SpectrumResult spec;
    spec.source = SpectrumResult::Source::closed_form;
    for (auto& [lambda, mult] : merged) {
        spec.pairs.emplace_back(static_cast<double>(lambda), mult);
        spec.n += mult;
    }
    return spec;
}

namespace {

SpectrumResult cluster_eigenvalues(std::vector<double> ev) {
    SpectrumResult spec;
    spec.source = SpectrumResult::Source::numeric;
    spec.n = static_cast<long long>(ev.size());
    size_t i = 0;
    while (i < ev.size()) {
        size_t j = i + 1;
        double sum = ev[i];
        while (j < ev.size() && ev[j] - ev[j - 1] < kClusterGap) {
            sum += ev[j];
            ++j;
        }
        spec.pairs.emplace_back(sum / static_cast<double>(j - i), static_cast<long long>(j - i));
        i = j;
    }
    return spec;
}

} // namespace

SpectrumResult numeric_spectrum(const Graph& g, int dense_limit) {
    if (g.n > dense_limit)
        throw std::invalid_argument("numeric_spectrum: n exceeds dense limit");
    return cluster_eigenvalues(symmetric_eigenvalues(laplacian_matrix(g)));
}

namespace {

// Apply fn(w) to every vertex in the subtree rooted at x (x included).
template <typename Fn>
void for_subtree(const HierarchicalNetwork& net, int x, Fn&& fn) {
    fn(x);
    int lx = net.level[x];
    long long lo = x - net.level_start[lx];
    long long hi = lo;
    for (int l = lx + 1; l <= net.g; ++l) {
        lo *= net.r;
        hi = hi * net.r + (net.r - 1);
        for (long long p = lo; p <= hi; ++p) fn(static_cast<int>(net.level_start[l] + p));
    }
}

} // namespace

EigenPair eigenvector_family1(const HierarchicalNetwork& net, int v) {
    if (v < 0 || v >= net.graph.n) throw std::invalid_argument("vertex out of range");
    if (net.is_leaf(v)) throw std::invalid_argument("family-1 eigenvector needs a non-leaf vertex");

    EigenPair pair;
    pair.eigenvalue = static_cast<double>(net.graph.degree(v) + 1);
    pair.vector.assign(net.graph.n, 0.0);
    for_subtree(net, v, [&](int w) { pair.vector[w] = 1.0; });
    pair.vector[v] = -static_cast<double>(net.desc_count[v]);
    return pair;
}

EigenPair eigenvector_family2(const HierarchicalNetwork& net, int v, int s) {
    if (v < 0 || v >= net.graph.n) throw std::invalid_argument("vertex out of range");
    if (net.is_leaf(v)) throw std::invalid_argument("family-2 eigenvector needs a non-leaf vertex");
    if (s < 2 || s > net.r) throw std::invalid_argument("sibling index s must be in [2, r]");

    EigenPair pair;
    pair.eigenvalue = static_cast<double>(net.level[v] + 1);
    pair.vector.assign(net.graph.n, 0.0);
    int first_child = net.r * v + 1;
    for_subtree(net, first_child, [&](int w) { pair.vector[w] = -1.0; });
    for_subtree(net, first_child + (s - 1), [&](int w) { pair.vector[w] = 1.0; });
    return pair;
}

double eigen_residual(const Graph& g, const EigenPair& pair) {
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < g.n; ++i) {
        double lx = g.degree(i) * pair.vector[i];
        for (int j : g.adj[i]) lx -= pair.vector[j];
        worst = std::max(worst, std::fabs(lx - pair.eigenvalue * pair.vector[i]));
        scale = std::max(scale, std::fabs(pair.vector[i]));
    }
    return scale > 0.0 ? worst / scale : worst;
}

std::vector<double> transition_spectrum(const Graph& g, int dense_limit) {
    if (g.n > dense_limit)
        throw std::invalid_argument("transition_spectrum: n exceeds dense limit");
    std::vector<double> theta = symmetric_eigenvalues(normalized_adjacency(g));
    std::reverse(theta.begin(), theta.end());
    return theta;
}

SpectralExtremes extremes(const SpectrumResult& spec) {
    if (spec.pairs.size() < 2)
        throw std::invalid_argument("extremes needs a spectrum with a nonzero eigenvalue");
    if (std::fabs(spec.pairs.front().first) > 1e-8 || spec.pairs.front().second != 1)
        throw std::invalid_argument("malformed spectrum: expected eigenvalue 0 with multiplicity 1");

    SpectralExtremes ex;
    ex.lambda2 = spec.pairs[1].first;
    ex.lambdaN = spec.pairs.back().first;
    ex.eps_max = std::numbers::pi / (2.0 * ex.lambdaN);
    return ex;
}

void write_spectrum_json(const SpectrumResult& spec, std::ostream& out) {
    out << "{\"n\": " << spec.n << ", \"source\": \""
        << (spec.source == SpectrumResult::Source::closed_form ? "closed_form" : "numeric")
        << "\", \"pairs\": [";
    bool first = true;
    for (auto& [lambda, mult] : spec.pairs) {
        if (!first) out << ", ";
        first = false;
        out << "{\"lambda\": " << fmt17(lambda) << ", \"mult\": " << mult << "}";
    }
    out << "]}\n";
}

} // namespace hsw

#include "hsw/coherence.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hsw/format.hpp"
#include "hsw/hsw.hpp"

namespace hsw {
namespace {

double hsw_order(int r, int g) {
    double n = 1.0, p = 1.0;
    for (int i = 1; i <= g; ++i) {
        p *= r;
        n += p;
    }
    return n;
}

// Shared evaluator for the two closed forms: sum over tree levels of
// r^i (1/(tree term)^order + (r-1)^{order-1}/(big term)^order) with the
// common prefactor (r-1)^2 / (2 (r^{g+1}-1)).
double h_closed(int r, int g, int order) {
    if (r < 2) throw std::invalid_argument("branching factor r must be >= 2");
    if (g < 1) throw std::invalid_argument("coherence closed form needs g >= 1");

    double r_pow_gi1 = std::pow(static_cast<double>(r), g + 1); // r^{g-i+1} at i = 0
    double r_pow_i = 1.0;
    CompensatedSum acc;
    for (int i = 0; i < g; ++i) {
        double big = r_pow_gi1 + static_cast<double>(i) * (r - 1) - 1.0;
        double tree = static_cast<double>(i + 1);
        double term;
        if (order == 1)
            term = r_pow_i * (1.0 / big + 1.0 / tree);
        else
            term = r_pow_i * ((r - 1.0) / (big * big) + 1.0 / (tree * tree));
        acc.add(term);
        r_pow_gi1 /= r;
        r_pow_i *= r;
    }
    double prefactor = (r - 1.0) * (r - 1.0) / (2.0 * (hsw_order(r, g) * (r - 1.0)));
    return prefactor * acc.value();
}

} // namespace

double coherence_from_spectrum(const SpectrumResult& spec, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("coherence order must be 1 or 2");
    if (spec.n < 2) throw std::invalid_argument("coherence needs n >= 2");

    CompensatedSum acc;
    bool any_nonzero = false;
    for (auto& [lambda, mult] : spec.pairs) {
        if (std::fabs(lambda) < 1e-12) continue;
        any_nonzero = true;
        double inv = order == 1 ? 1.0 / lambda : 1.0 / (lambda * lambda);
        acc.add(static_cast<double>(mult) * inv);
    }
    if (!any_nonzero) throw std::invalid_argument("spectrum has no nonzero eigenvalues");
    return acc.value() / (2.0 * static_cast<double>(spec.n));
}

double h1_closed(int r, int g) { return h_closed(r, g, 1); }
double h2_closed(int r, int g) { return h_closed(r, g, 2); }

double kirchhoff_index(const SpectrumResult& spec) {
    CompensatedSum acc;
    for (auto& [lambda, mult] : spec.pairs) {
        if (std::fabs(lambda) < 1e-12) continue;
        acc.add(static_cast<double>(mult) / lambda);
    }
    return static_cast<double>(spec.n) * acc.value();
}

CoherenceReport bound_report(const Graph& g, const SpectrumResult& spec,
                             const std::vector<double>& theta, const GraphMetrics& metrics) {
    if (spec.n != g.n || static_cast<int>(theta.size()) != g.n)
        throw std::invalid_argument("bound_report: inconsistent input sizes");

    CoherenceReport rep;
    rep.h1 = coherence_from_spectrum(spec, 1);
    rep.h2 = coherence_from_spectrum(spec, 2);
    rep.kirchhoff = kirchhoff_index(spec);

    double n = static_cast<double>(g.n);
    double m = static_cast<double>(g.m());
    rep.lower_bound_k = (n - 1.0) * (n - 1.0) / (4.0 * m * n);
    rep.upper_bound_mu = metrics.avg_path_length / 4.0;

    CompensatedSum theta_sum; // sum over i >= 2 of 1/(1 - theta_i)
    for (size_t i = 1; i < theta.size(); ++i) theta_sum.add(1.0 / (1.0 - theta[i]));
    rep.transition_lower = theta_sum.value() / (2.0 * n * metrics.max_degree);
    rep.transition_upper = theta_sum.value() / (2.0 * n * metrics.min_degree);

    // Equality cases (regular graphs, complete graphs) need slack for the
    // two independent floating evaluation paths.
    const double slack = 1e-9 * std::max(1.0, std::fabs(rep.h1));
    rep.degree_bounds_hold =
        rep.lower_bound_k <= rep.h1 + slack && rep.h1 <= rep.upper_bound_mu + slack;
    rep.transition_bounds_hold =
        rep.transition_lower <= rep.h1 + slack && rep.h1 <= rep.transition_upper + slack;
    rep.kirchhoff_identity_holds =
        std::fabs(rep.h1 - rep.kirchhoff / (2.0 * n * n)) <= 1e-12 * std::fabs(rep.h1);

    SpectralExtremes ex = extremes(spec);
    rep.fiedler_chain_applicable = !g.is_complete();
    if (metrics.vertex_connectivity && metrics.edge_connectivity) {
        int cv = *metrics.vertex_connectivity;
        int ce = *metrics.edge_connectivity;
        bool tail = cv <= ce && ce <= metrics.min_degree;
        rep.fiedler_chain_holds =
            tail && (!rep.fiedler_chain_applicable || ex.lambda2 <= cv + 1e-8);
    }

    rep.all_hold = rep.degree_bounds_hold && rep.transition_bounds_hold &&
                   rep.kirchhoff_identity_holds && rep.fiedler_chain_holds;
    return rep;
}

std::vector<ScalingRow> scaling_table(int r, int g_max) {
    if (g_max < 2) throw std::invalid_argument("scaling_table needs g_max >= 2");

    std::vector<ScalingRow> rows;
    rows.reserve(g_max);
    for (int g = 1; g <= g_max; ++g) {
        ScalingRow row;
        row.g = g;
        row.n = order_and_size(r, g).vertices;
        row.h1 = h1_closed(r, g);
        row.h2 = h2_closed(r, g);
        double ln_n = std::log(static_cast<double>(n));
        double ln_ln_n = std::log(ln_n);
        row.h1_scaled = row.h1 * ln_n * ln_ln_n;
        row.h2_scaled = row.h2 * ln_n * ln_n * ln_ln_n;
        rows.push_back(row);
    }
    return rows;
}

void write_scaling_csv(int r, const std::vector<ScalingRow>& rows, std::ostream& out) {
    out << "r,g,N,h1,h2,h1_scaled,h2_scaled\n";
    for (const auto& row : rows) {
        out << r << "," << row.g << "," << row.n << "," << fmt17(row.h1) << "," << fmt17(row.h2)
            << "," << fmt17(row.h1_scaled) << "," << fmt17(row.h2_scaled) << "\n";
    }
}

} // namespace hsw

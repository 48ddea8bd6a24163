#ifndef HSW_COHERENCE_HPP
#define HSW_COHERENCE_HPP

#include <cmath>
#include <iosfwd>
#include <vector>

#include "hsw/graph.hpp"
#include "hsw/metrics.hpp"
#include "hsw/spectrum.hpp"

namespace hsw {

// Neumaier-compensated accumulator. The closed-form-vs-spectral equality
// checks run at 1e-12 relative, which naive summation misses at large g.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

// (1/2n) sum of mult/lambda (order 1) or mult/lambda^2 (order 2) over the
// nonzero eigenvalues.
double coherence_from_spectrum(const SpectrumResult& spec, int order);

// Closed forms for M_g^r, evaluated exactly as the double-family sums.
double h1_closed(int r, int g);
double h2_closed(int r, int g);

// R = N * sum of mult/lambda over nonzero eigenvalues; H1 = R / (2 N^2).
double kirchhoff_index(const SpectrumResult& spec);

struct CoherenceReport {
    double h1 = 0.0;
    double h2 = 0.0;
    double kirchhoff = 0.0;
    // Degree bound, in the exact finite-n form (N-1)^2/(4mN); the familiar
    // 1/(2<k>) is its n -> infinity limit and overshoots at small n.
    double lower_bound_k = 0.0;
    double upper_bound_mu = 0.0; // mu / 4
    double transition_lower = 0.0;
    double transition_upper = 0.0;
    bool degree_bounds_hold = false;
    bool transition_bounds_hold = false;
    bool kirchhoff_identity_holds = false;
    // lambda2 <= c_v is Fiedler's theorem for non-complete graphs; on a
    // complete graph only c_v <= c_e <= delta is checked.
    bool fiedler_chain_applicable = false;
    bool fiedler_chain_holds = false;
    bool all_hold = false;
};

// All inputs must describe the same graph.
CoherenceReport bound_report(const Graph& g, const SpectrumResult& spec,
                             const std::vector<double>& theta, const GraphMetrics& metrics);

struct ScalingRow {
    int g = 0;
    long long n = 0;
    double h1 = 0.0;
    double h2 = 0.0;
    double h1_scaled = 0.0; // h1 * ln N * ln ln N
    double h2_scaled = 0.0; // h2 * (ln N)^2 * ln ln N
};

// Rows for g = 1..g_max from the closed forms only (no matrices), so large
// g is cheap. Throws std::overflow_error if N_g leaves 64-bit range.
std::vector<ScalingRow> scaling_table(int r, int g_max);

// CSV: "r,g,N,h1,h2,h1_scaled,h2_scaled", floats at 17 significant digits.
void write_scaling_csv(int r, const std::vector<ScalingRow>& rows, std::ostream& out);

} // namespace hsw

#endif

#ifndef HSW_DYNAMICS_HPP
#define HSW_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "hsw/graph.hpp"

namespace hsw {

inline constexpr double kConvergenceTol = 1e-8;
inline constexpr double kDivergenceFactor = 1e6;
inline constexpr int kMinDelaySlots = 20;

enum class Integrator { euler, rk4 };

struct SimConfig {
    double dt = 0.0;
    long long steps = 0;
    long long burn_in = 0;   // steps dropped before statistics (noisy runs)
    int trials = 1;          // independent noise realizations
    std::uint64_t seed = 0;
    double delay = 0.0;      // epsilon, delay protocol only
    long long sample_stride = 1;
    Integrator integrator = Integrator::euler;
};

struct SimulationTrace {
    std::vector<double> times;
    std::vector<std::vector<double>> states; // one state vector per sample
    std::vector<double> disagreement;        // max |x_i - mean| per sample
    double variance_estimate = 0.0;
    bool converged = false;
    bool diverged = false;
    std::uint64_t seed_used = 0;
    long long steps_run = 0;
    double mean_drift_max = 0.0; // largest per-step change of the state mean
    double final_disagreement = 0.0;
};

// dX/dt = -L X, explicit Euler (or RK4 per cfg). Rejects dt with
// dt * lambda_N >= 2. Stops early once the disagreement falls below
// kConvergenceTol.
SimulationTrace simulate_noiseless(const Graph& g, const std::vector<double>& x0,
                                   const SimConfig& cfg);

// dX/dt = -L X(t - eps) with constant history X(t) = x0 on [-eps, 0],
// integrated by explicit Euler over a ring buffer of round(eps/dt) past
// states. eps must sit on the step grid and span at least kMinDelaySlots
// slots. Flags diverged once the disagreement exceeds kDivergenceFactor
// times its initial value.
SimulationTrace simulate_delay(const Graph& g, const std::vector<double>& x0,
                               const SimConfig& cfg);

struct NoiseEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0; // across-trial standard error
    int trials = 0;
};

// Euler-Maruyama on dX = -L X dt + dW (unit-intensity Wiener noise per
// agent). After burn-in accumulates the per-step mean over agents of
// (x_i - xbar)^2, then averages over time and trials; the limit is the
// first-order coherence. Trials run concurrently but aggregate in trial
// order, so results are bit-identical to the serial variant.
NoiseEstimate estimate_h1(const Graph& g, const SimConfig& cfg);
NoiseEstimate estimate_h1_serial(const Graph& g, const SimConfig& cfg);

// Same for the second-order system: x' = y, y' = -L x - L y + noise,
// variance taken on the X deviations only.
NoiseEstimate estimate_h2(const Graph& g, const SimConfig& cfg);
NoiseEstimate estimate_h2_serial(const Graph& g, const SimConfig& cfg);

// Largest Laplacian eigenvalue used by the stability checks (numeric when
// the dense budget allows, else the 2*max_degree bound).
double stability_lambda_max(const Graph& g);

// Smallest nonzero Laplacian eigenvalue (numeric), used by the burn-in
// check and default burn-in lengths.
double stability_lambda2(const Graph& g);

} // namespace hsw

#endif

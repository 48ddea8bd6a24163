#include "hsw/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "hsw/coherence.hpp"
#include "hsw/rng.hpp"
#include "hsw/spectrum.hpp"

namespace hsw {
namespace {

void check_config(const Graph& g, const std::vector<double>* x0, const SimConfig& cfg) {
    if (!is_connected(g)) throw std::invalid_argument("simulation needs a connected graph");
    if (cfg.dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (cfg.steps <= 0) throw std::invalid_argument("steps must be positive");
    if (cfg.burn_in >= cfg.steps) throw std::invalid_argument("burn_in must be below steps");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.delay < 0.0) throw std::invalid_argument("delay must be >= 0");
    if (x0 && static_cast<int>(x0->size()) != g.n)
        throw std::invalid_argument("x0 length does not match vertex count");
}

// (L x)_i = deg(i) x_i - sum of neighbors, via adjacency lists.
void laplacian_apply(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
    for (int i = 0; i < g.n; ++i) {
        double acc = g.degree(i) * x[i];
        for (int j : g.adj[i]) acc -= x[j];
        out[i] = acc;
    }
}

double mean_of(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double disagreement_of(const std::vector<double>& x, double mean) {
    double worst = 0.0;
    for (double v : x) worst = std::max(worst, std::fabs(v - mean));
    return worst;
}

void require_euler_stable(const Graph& g, double dt) {
    double lam_max = stability_lambda_max(g);
    if (dt * lam_max >= 2.0)
        throw std::invalid_argument("dt too large: dt * lambda_N = " +
                                    std::to_string(dt * lam_max) + " >= 2");
}

struct TraceRecorder {
    SimulationTrace trace;
    long long stride;

    explicit TraceRecorder(const SimConfig& cfg)
        : stride(std::max<long long>(1, cfg.sample_stride)) {
        trace.seed_used = cfg.seed;
    }

    void sample(long long step, double dt, const std::vector<double>& x, double dis,
                bool force = false) {
        if (step % stride != 0 && !force) return;
        trace.times.push_back(step * dt);
        trace.states.push_back(x);
        trace.disagreement.push_back(dis);
    }
};

} // namespace

double stability_lambda_max(const Graph& g) {
    if (g.n <= kDenseLimit) {
        SpectrumResult spec = numeric_spectrum(g);
        return spec.pairs.back().first;
    }
    int max_deg = 0;
    for (int v = 0; v < g.n; ++v) max_deg = std::max(max_deg, g.degree(v));
    return 2.0 * max_deg;
}

double stability_lambda2(const Graph& g) {
    SpectrumResult spec = numeric_spectrum(g);
    return extremes(spec).lambda2;
}

SimulationTrace simulate_noiseless(const Graph& g, const std::vector<double>& x0,
                                   const SimConfig& cfg) {
    check_config(g, &x0, cfg);
    require_euler_stable(g, cfg.dt);

    TraceRecorder rec(cfg);
    std::vector<double> x = x0;
    std::vector<double> lx(g.n), k2(g.n), k3(g.n), k4(g.n), tmp(g.n);

    double mean_prev = mean_of(x);
    double dis = disagreement_of(x, mean_prev);
    rec.sample(0, cfg.dt, x, dis, true);

    long long step = 0;
    while (step < cfg.steps && dis >= kConvergenceTol) {
        if (cfg.integrator == Integrator::euler) {
            laplacian_apply(g, x, lx);
            for (int i = 0; i < g.n; ++i) x[i] -= cfg.dt * lx[i];
        } else {
            laplacian_apply(g, x, lx); // k1 = -L x, stored negated below
            for (int i = 0; i < g.n; ++i) tmp[i] = x[i] - 0.5 * cfg.dt * lx[i];
            laplacian_apply(g, tmp, k2);
            for (int i = 0; i < g.n; ++i) tmp[i] = x[i] - 0.5 * cfg.dt * k2[i];
            laplacian_apply(g, tmp, k3);
            for (int i = 0; i < g.n; ++i) tmp[i] = x[i] - cfg.dt * k3[i];
            laplacian_apply(g, tmp, k4);
            for (int i = 0; i < g.n; ++i)
                x[i] -= cfg.dt / 6.0 * (lx[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        ++step;

        double mean_now = mean_of(x);
        rec.trace.mean_drift_max = std::max(rec.trace.mean_drift_max,
                                            std::fabs(mean_now - mean_prev));
        mean_prev = mean_now;
        dis = disagreement_of(x, mean_now);
        rec.sample(step, cfg.dt, x, dis, dis < kConvergenceTol || step == cfg.steps);
    }

    rec.trace.steps_run = step;
    rec.trace.converged = dis < kConvergenceTol;
    rec.trace.final_disagreement = dis;
    return rec.trace;
}

SimulationTrace simulate_delay(const Graph& g, const std::vector<double>& x0,
                               const SimConfig& cfg) {
    check_config(g, &x0, cfg);
    if (cfg.delay <= 0.0) throw std::invalid_argument("delay protocol needs eps > 0");
    require_euler_stable(g, cfg.dt);

    long long slots = std::llround(cfg.delay / cfg.dt);
    if (slots < 1 || std::fabs(slots * cfg.dt - cfg.delay) > 1e-9 * std::max(cfg.delay, cfg.dt))
        throw std::invalid_argument("eps must be a positive multiple of dt");
    if (slots < kMinDelaySlots)
        throw std::invalid_argument("dt too coarse: delay spans fewer than " +
                                    std::to_string(kMinDelaySlots) + " steps");

    TraceRecorder rec(cfg);
    std::vector<double> x = x0;
    std::vector<double> lx(g.n);
    // history[j % slots] holds x at step j - slots; constant x0 before t = 0.
    std::vector<std::vector<double>> history(slots, x0);

    double mean_prev = mean_of(x);
    double dis = disagreement_of(x, mean_prev);
    const double dis0 = dis;
    rec.sample(0, cfg.dt, x, dis, true);

    long long step = 0;
    bool diverged = false;
    while (step < cfg.steps && dis >= kConvergenceTol && !diverged) {
        std::vector<double>& slot = history[step % slots];
        laplacian_apply(g, slot, lx);
        slot = x; // x at this step, read again at step + slots
        for (int i = 0; i < g.n; ++i) x[i] -= cfg.dt * lx[i];
        ++step;

        double mean_now = mean_of(x);
        rec.trace.mean_drift_max = std::max(rec.trace.mean_drift_max,
                                            std::fabs(mean_now - mean_prev));
        mean_prev = mean_now;
        dis = disagreement_of(x, mean_now);
        diverged = dis0 > 0.0 && dis > kDivergenceFactor * dis0;
        rec.sample(step, cfg.dt, x, dis,
                   dis < kConvergenceTol || diverged || step == cfg.steps);
    }

    rec.trace.steps_run = step;
    rec.trace.converged = dis < kConvergenceTol;
    rec.trace.diverged = diverged;
    rec.trace.final_disagreement = dis;
    return rec.trace;
}

namespace {

// One first- or second-order noisy trial; returns the time-averaged mean
// square deviation from the running average after burn-in.
double noise_trial(const Graph& g, const SimConfig& cfg, int order, std::uint64_t stream) {
    std::mt19937_64 rng = stream_rng(cfg.seed, stream);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double noise_scale = std::sqrt(cfg.dt);

    std::vector<double> x(g.n, 0.0), y(g.n, 0.0), lx(g.n), ly(g.n), xn(g.n);
    CompensatedSum acc;
    long long samples = 0;

    for (long long step = 0; step < cfg.steps; ++step) {
        if (order == 1) {
            laplacian_apply(g, x, lx);
            for (int i = 0; i < g.n; ++i)
                x[i] += -cfg.dt * lx[i] + noise_scale * gauss(rng);
        } else {
            laplacian_apply(g, x, lx);
            laplacian_apply(g, y, ly);
            for (int i = 0; i < g.n; ++i) {
                xn[i] = x[i] + cfg.dt * y[i];
                y[i] += -cfg.dt * lx[i] - cfg.dt * ly[i] + noise_scale * gauss(rng);
            }
            std::swap(x, xn);
        }
        if (step >= cfg.burn_in) {
            double mean = mean_of(x);
            double sq = 0.0;
            for (double v : x) sq += (v - mean) * (v - mean);
            acc.add(sq / static_cast<double>(g.n));
            ++samples;
        }
    }
    return acc.value() / static_cast<double>(samples);
}

NoiseEstimate run_noise_trials(const Graph& g, const SimConfig& cfg, int order, bool parallel) {
    check_config(g, nullptr, cfg);
    require_euler_stable(g, cfg.dt);
    if (order == 2) {
        // Explicit Euler acts on the modes of the block system; every root
        // of s^2 + lambda s + lambda must satisfy |1 + dt s| < 1.
        SpectrumResult spec = numeric_spectrum(g);
        for (auto& [lambda, mult] : spec.pairs) {
            if (lambda < 1e-12) continue;
            std::complex<double> disc = std::sqrt(std::complex<double>(lambda * lambda - 4.0 * lambda, 0.0));
            for (double sign : {1.0, -1.0}) {
                std::complex<double> root = 0.5 * (-lambda + sign * disc);
                if (std::abs(1.0 + cfg.dt * root) >= 1.0)
                    throw std::invalid_argument("dt unstable for the second-order block system");
            }
        }
    }
    double lam2 = stability_lambda2(g);
    if (std::exp(-lam2 * static_cast<double>(cfg.burn_in) * cfg.dt) >= 1e-3)
        throw std::invalid_argument("burn-in too short: slowest mode not decayed to 1e-3");

    std::vector<double> per_trial(cfg.trials);
#pragma omp parallel for if (parallel) schedule(dynamic)
    for (int t = 0; t < cfg.trials; ++t)
        per_trial[t] = noise_trial(g, cfg, order, static_cast<std::uint64_t>(t));

    // Aggregate in trial order, independent of which thread ran what.
    CompensatedSum mean_acc;
    for (double v : per_trial) mean_acc.add(v);
    double mean = mean_acc.value() / cfg.trials;

    double stderr_value = 0.0;
    if (cfg.trials > 1) {
        CompensatedSum var_acc;
        for (double v : per_trial) var_acc.add((v - mean) * (v - mean));
        stderr_value = std::sqrt(var_acc.value() / (cfg.trials - 1)) / std::sqrt(cfg.trials);
    }
    return {mean, stderr_value, cfg.trials};
}

} // namespace

NoiseEstimate estimate_h1(const Graph& g, const SimConfig& cfg) {
    return run_noise_trials(g, cfg, 1, true);
}

NoiseEstimate estimate_h1_serial(const Graph& g, const SimConfig& cfg) {
    return run_noise_trials(g, cfg, 1, false);
}

NoiseEstimate estimate_h2(const Graph& g, const SimConfig& cfg) {
    return run_noise_trials(g, cfg, 2, true);
}

NoiseEstimate estimate_h2_serial(const Graph& g, const SimConfig& cfg) {
    return run_noise_trials(g, cfg, 2, false);
}

} // namespace hsw

// Compares the OpenMP kernels against their serial reference
// implementations: all-sources BFS (average path length), the Jacobi
// eigensolver row updates, and Monte Carlo noise trials.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hsw/dynamics.hpp"
#include "hsw/graph.hpp"
#include "hsw/hsw.hpp"
#include "hsw/jacobi.hpp"
#include "hsw/matrices.hpp"
#include "hsw/metrics.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", kernel,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "results identical" : "RESULTS DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both lanes run serially\n\n");
#endif

    {
        hsw::Graph g = hsw::build_hsw(2, 12).graph; // n = 8191
        double mu_serial = 0.0, mu_parallel = 0.0;
        double ts = time_ms([&] { mu_serial = hsw::avg_path_length_serial(g); });
        double tp = time_ms([&] { mu_parallel = hsw::avg_path_length(g); });
        report("avg_path_length (n=8191)", ts, tp, mu_serial == mu_parallel);
    }

    {
        hsw::Graph g = hsw::build_hsw(2, 9).graph; // n = 1023
        hsw::SquareMatrix L = hsw::laplacian_matrix(g);
        std::vector<double> ev_serial, ev_parallel;
        double ts = time_ms([&] { ev_serial = hsw::symmetric_eigenvalues_serial(L); });
        double tp = time_ms([&] { ev_parallel = hsw::symmetric_eigenvalues(L); });
        report("jacobi eigenvalues (n=1023)", ts, tp, ev_serial == ev_parallel);
    }

    {
        hsw::Graph g = hsw::build_hsw(2, 3).graph; // n = 15
        hsw::SimConfig cfg;
        cfg.dt = 0.1 / 15.0;
        cfg.burn_in = 3200;
        cfg.steps = 16000;
        cfg.trials = 64;
        cfg.seed = 42;
        hsw::NoiseEstimate serial{}, parallel{};
        double ts = time_ms([&] { serial = hsw::estimate_h1_serial(g, cfg); });
        double tp = time_ms([&] { parallel = hsw::estimate_h1(g, cfg); });
        report("noise trials h1 (64 trials)", ts, tp,
               serial.estimate == parallel.estimate && serial.stderr_ == parallel.stderr_);
    }

    return 0;
}

#include "hsw/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsw {
namespace {

// Cyclic Jacobi with the classic threshold schedule. Eigenvalues only,
// no eigenvector accumulation. `use_threads` gates the OpenMP split of
// the per-rotation row/column update; the sweep order itself is fixed.
std::vector<double> jacobi_eigenvalues(SquareMatrix& m, bool use_threads) {
    const int n = m.n;
    if (n == 0) return {};
    if (n == 1) return {m(0, 0)};

    std::vector<double> d(n), b(n), z(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = b[i] = m(i, i);

    const double eps = std::numeric_limits<double>::epsilon();
    const int max_sweeps = 100;

    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) off += std::fabs(m(p, q));
        if (off == 0.0) {
            std::sort(d.begin(), d.end());
            return d;
        }

        const double tresh = sweep < 4 ? 0.2 * off / (static_cast<double>(n) * n) : 0.0;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m(p, q);
                double g = 100.0 * std::fabs(apq);
                if (sweep > 4 && g <= eps * std::fabs(d[p]) && g <= eps * std::fabs(d[q])) {
                    m(p, q) = 0.0;
                    m(q, p) = 0.0;
                    continue;
                }
                if (std::fabs(apq) <= tresh) continue;

                double h = d[q] - d[p];
                double t;
                if (g <= eps * std::fabs(h)) {
                    t = apq / h;
                } else {
                    double theta = 0.5 * h / apq;
                    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double tau = s / (1.0 + c);
                h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                m(p, q) = 0.0;
                m(q, p) = 0.0;

                double* row_p = &m.a[static_cast<size_t>(p) * n];
                double* row_q = &m.a[static_cast<size_t>(q) * n];
                // Each j touches its own pair of entries, so the split is
                // bit-identical to the serial loop.
#pragma omp parallel for if (use_threads && n >= 512) schedule(static)
                for (int j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    double gj = row_p[j];
                    double hj = row_q[j];
                    row_p[j] = gj - s * (hj + gj * tau);
                    row_q[j] = hj + s * (gj - hj * tau);
                    m(j, p) = row_p[j];
                    m(j, q) = row_q[j];
                }
            }
        }

        for (int i = 0; i < n; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    throw std::runtime_error("jacobi eigensolver did not converge");
}

} // namespace

std::vector<double> symmetric_eigenvalues(SquareMatrix a) {
    return jacobi_eigenvalues(a, true);
}

std::vector<double> symmetric_eigenvalues_serial(SquareMatrix a) {
    return jacobi_eigenvalues(a, false);
}

} // namespace hsw

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hsw/graph.hpp"
#include "hsw/hsw.hpp"
#include "hsw/jacobi.hpp"
#include "hsw/matrices.hpp"
#include "hsw/spectrum.hpp"

using namespace hsw;

namespace {

bool spectra_equal(const SpectrumResult& a, const SpectrumResult& b, double tol) {
    if (a.n != b.n || a.pairs.size() != b.pairs.size()) return false;
    for (size_t i = 0; i < a.pairs.size(); ++i) {
        if (std::fabs(a.pairs[i].first - b.pairs[i].first) > tol) return false;
        if (a.pairs[i].second != b.pairs[i].second) return false;
    }
    return true;
}

} // namespace

TEST_CASE("jacobi solver: invariance of trace and Frobenius norm on random symmetric input") {
    std::mt19937 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int n : {3, 10, 40}) {
        SquareMatrix a(n);
        double trace = 0.0, frob = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double x = gauss(rng);
                a(i, j) = a(j, i) = x;
            }
        for (int i = 0; i < n; ++i) {
            trace += a(i, i);
            for (int j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
        }
        std::vector<double> ev = symmetric_eigenvalues(a);
        double ev_trace = 0.0, ev_frob = 0.0;
        for (double l : ev) {
            ev_trace += l;
            ev_frob += l * l;
        }
        CHECK(ev_trace == doctest::Approx(trace).epsilon(1e-10));
        CHECK(ev_frob == doctest::Approx(frob).epsilon(1e-10));
        CHECK(std::is_sorted(ev.begin(), ev.end()));
    }
}

TEST_CASE("jacobi parallel and serial lanes agree bit-for-bit") {
    Graph g = build_hsw(2, 5).graph;
    SquareMatrix L = laplacian_matrix(g);
    CHECK(symmetric_eigenvalues(L) == symmetric_eigenvalues_serial(L));
}

TEST_CASE("numeric spectrum of K_2 and star X_5") {
    SpectrumResult k2 = numeric_spectrum(build_baseline(Family::path, 2));
    REQUIRE(k2.pairs.size() == 2);
    CHECK(k2.pairs[0].first == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(k2.pairs[0].second == 1);
    CHECK(k2.pairs[1].first == doctest::Approx(2.0).epsilon(1e-12));

    SpectrumResult x5 = numeric_spectrum(build_baseline(Family::star, 5));
    REQUIRE(x5.pairs.size() == 3);
    CHECK(x5.pairs[0].second == 1);
    CHECK(x5.pairs[1].first == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x5.pairs[1].second == 3);
    CHECK(x5.pairs[2].first == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(x5.pairs[2].second == 1);
}

TEST_CASE("numeric spectrum rejects graphs beyond the dense budget") {
    Graph g = build_baseline(Family::cycle, 20);
    CHECK_THROWS_AS(numeric_spectrum(g, /*dense_limit=*/10), std::invalid_argument);
    CHECK_THROWS_AS(transition_spectrum(g, /*dense_limit=*/10), std::invalid_argument);
}

TEST_CASE("closed-form spectrum of M_3^2 reproduces the known table") {
    SpectrumResult spec = closed_form_spectrum(2, 3);
    std::vector<std::pair<double, long long>> expect{
        {0, 1}, {1, 1}, {2, 2}, {3, 4}, {5, 4}, {8, 2}, {15, 1}};
    CHECK(spec.pairs == expect);
    CHECK(spec.n == 15);
    CHECK(spec.multiplicity_sum() == 15);
    // trace identity: sum lambda * mult = 2 E_g
    CHECK(spec.trace() == doctest::Approx(2.0 * 34).epsilon(1e-15));
}

TEST_CASE("closed-form spectrum examples: (2,1) and (3,2)") {
    SpectrumResult p3 = closed_form_spectrum(2, 1);
    CHECK(p3.pairs == std::vector<std::pair<double, long long>>{{0, 1}, {1, 1}, {3, 1}});

    SpectrumResult m23 = closed_form_spectrum(3, 2);
    CHECK(m23.pairs ==
          std::vector<std::pair<double, long long>>{{0, 1}, {1, 2}, {2, 6}, {5, 3}, {13, 1}});
}

TEST_CASE("closed form rejects g = 0 and r < 2") {
    CHECK_THROWS_AS(closed_form_spectrum(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_spectrum(1, 3), std::invalid_argument);
}

TEST_CASE("closed form and numeric oracle agree as multisets, r in {2,3,4}, g in 1..4") {
    for (int r : {2, 3, 4}) {
        for (int g = 1; g <= 4; ++g) {
            SpectrumResult closed = closed_form_spectrum(r, g);
            SpectrumResult numeric = numeric_spectrum(build_hsw(r, g).graph);
            CHECK(spectra_equal(closed, numeric, 1e-8));

            // combinatorial identities
            OrderSize os = order_and_size(r, g);
            CHECK(closed.trace() == doctest::Approx(2.0 * static_cast<double>(os.edges)));
            long long nonzero_mult = 0;
            for (auto& [lambda, mult] : closed.pairs)
                if (lambda > 0.5) nonzero_mult += mult;
            CHECK(nonzero_mult == os.vertices - 1);
        }
    }
}

TEST_CASE("the two eigenvalue families never collide on the tested range") {
    // family 2 values stop at g, family 1 values start at r + g
    for (int r : {2, 3, 4, 5}) {
        for (int g = 1; g <= 6; ++g) {
            SpectrumResult spec = closed_form_spectrum(r, g);
            long long expected_distinct = 1 + 2 * g;
            CHECK(static_cast<long long>(spec.pairs.size()) == expected_distinct);
        }
    }
}

TEST_CASE("family-1 eigenvector at the root of M_3^2: eigenvalue 15") {
    HierarchicalNetwork net = build_hsw(2, 3);
    EigenPair pair = eigenvector_family1(net, 0);
    CHECK(pair.eigenvalue == 15.0);
    CHECK(pair.vector[0] == -14.0);
    for (int v = 1; v < 15; ++v) CHECK(pair.vector[v] == 1.0);
    CHECK(eigen_residual(net.graph, pair) <= 1e-9);
}

TEST_CASE("family-1 eigenvector entries sum to zero and satisfy the residual bound") {
    for (int r : {2, 3}) {
        for (int g : {2, 3}) {
            HierarchicalNetwork net = build_hsw(r, g);
            for (int v = 0; v < net.graph.n; ++v) {
                if (net.is_leaf(v)) continue;
                EigenPair pair = eigenvector_family1(net, v);
                double sum = 0.0;
                for (double x : pair.vector) sum += x;
                CHECK(sum == doctest::Approx(0.0).epsilon(1e-12));
                CHECK(eigen_residual(net.graph, pair) <= 1e-9);
            }
        }
    }
}

TEST_CASE("M_1^2 root family-1 eigenvector is (-2, 1, 1) with eigenvalue 3") {
    HierarchicalNetwork net = build_hsw(2, 1);
    EigenPair pair = eigenvector_family1(net, 0);
    CHECK(pair.eigenvalue == 3.0);
    CHECK(pair.vector == std::vector<double>{-2.0, 1.0, 1.0});
}

TEST_CASE("family-2 eigenvector at the root of M_3^2: eigenvalue 1, +-1 on the subtrees") {
    HierarchicalNetwork net = build_hsw(2, 3);
    EigenPair pair = eigenvector_family2(net, 0, 2);
    CHECK(pair.eigenvalue == 1.0);
    int plus = 0, minus = 0, zero = 0;
    double sum = 0.0;
    for (double x : pair.vector) {
        sum += x;
        if (x > 0.5) ++plus;
        else if (x < -0.5) ++minus;
        else ++zero;
    }
    CHECK(plus == 7);
    CHECK(minus == 7);
    CHECK(zero == 1);
    CHECK(sum == doctest::Approx(0.0));
    CHECK(eigen_residual(net.graph, pair) <= 1e-9);
}

TEST_CASE("family-2 vectors for one vertex are linearly independent (r = 3 root)") {
    HierarchicalNetwork net = build_hsw(3, 2);
    EigenPair a = eigenvector_family2(net, 0, 2);
    EigenPair b = eigenvector_family2(net, 0, 3);
    CHECK(a.eigenvalue == 1.0);
    CHECK(b.eigenvalue == 1.0);
    CHECK(eigen_residual(net.graph, a) <= 1e-9);
    CHECK(eigen_residual(net.graph, b) <= 1e-9);
    // strict Cauchy-Schwarz rules out one being a scalar multiple of the other
    double dot_ab = 0.0, dot_aa = 0.0, dot_bb = 0.0;
    for (int i = 0; i < net.graph.n; ++i) {
        dot_ab += a.vector[i] * b.vector[i];
        dot_aa += a.vector[i] * a.vector[i];
        dot_bb += b.vector[i] * b.vector[i];
    }
    CHECK(dot_ab * dot_ab < dot_aa * dot_bb);
}

TEST_CASE("eigenvector constructors reject leaves and bad sibling indices") {
    HierarchicalNetwork net = build_hsw(2, 2);
    int leaf = net.graph.n - 1;
    CHECK_THROWS_AS(eigenvector_family1(net, leaf), std::invalid_argument);
    CHECK_THROWS_AS(eigenvector_family2(net, leaf, 2), std::invalid_argument);
    CHECK_THROWS_AS(eigenvector_family2(net, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(eigenvector_family2(net, 0, 3), std::invalid_argument);
}

TEST_CASE("transition spectrum: K_2 is {1,-1}, P_3 is {1,0,-1}, Perron root simple") {
    std::vector<double> k2 = transition_spectrum(build_baseline(Family::path, 2));
    CHECK(k2[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k2[1] == doctest::Approx(-1.0).epsilon(1e-12));

    std::vector<double> p3 = transition_spectrum(build_baseline(Family::path, 3));
    CHECK(p3[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p3[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p3[2] == doctest::Approx(-1.0).epsilon(1e-12));

    for (Family f : {Family::cycle, Family::star, Family::complete}) {
        std::vector<double> theta = transition_spectrum(build_baseline(f, 7));
        CHECK(theta[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(theta[1] < 1.0 - 1e-8);
    }
}

TEST_CASE("spectral extremes of M_3^2 and K_5") {
    SpectralExtremes ex = extremes(closed_form_spectrum(2, 3));
    CHECK(ex.lambda2 == 1.0);
    CHECK(ex.lambdaN == 15.0);
    CHECK(ex.eps_max == doctest::Approx(std::numbers::pi / 30.0).epsilon(1e-15));

    SpectralExtremes k5 = extremes(numeric_spectrum(build_baseline(Family::complete, 5)));
    CHECK(k5.lambda2 == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(k5.lambdaN == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("lambda_N equals N_g for every tested hierarchical network") {
    for (int r : {2, 3, 4}) {
        for (int g = 1; g <= 4; ++g) {
            SpectralExtremes ex = extremes(closed_form_spectrum(r, g));
            CHECK(ex.lambda2 == 1.0);
            CHECK(ex.lambdaN == static_cast<double>(order_and_size(r, g).vertices));
        }
    }
}

TEST_CASE("extremes rejects a malformed spectrum") {
    SpectrumResult bad;
    bad.n = 3;
    bad.pairs = {{1.0, 2}, {3.0, 1}};
    CHECK_THROWS_AS(extremes(bad), std::invalid_argument);
}

TEST_CASE("spectrum JSON shape") {
    std::ostringstream os;
    write_spectrum_json(closed_form_spectrum(2, 1), os);
    CHECK(os.str() ==
          "{\"n\": 3, \"source\": \"closed_form\", \"pairs\": [{\"lambda\": 0, \"mult\": 1}, "
          "{\"lambda\": 1, \"mult\": 1}, {\"lambda\": 3, \"mult\": 1}]}\n");
}
